#ifndef WITGEN_ERRORS_HPP
#define WITGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace witgen {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed model data or mixing classes from different models.
struct model_error : error {
  using error::error;
};

// Unreadable or schema-violating input files.
struct parse_error : error {
  using error::error;
};

// Spin^c / spin precondition failures (w2 mismatches).
struct spinc_error : error {
  using error::error;
};

// Series preconditions: non-unit leading coefficient, non-nilpotent exponent.
struct series_error : error {
  using error::error;
};

// Enumeration bound guard tripped.
struct search_error : error {
  using error::error;
};

// An invariant the engine itself guarantees was violated (always a bug),
// e.g. the two genus evaluation routes disagreeing.
struct internal_error : error {
  using error::error;
};

} // namespace witgen

#endif
