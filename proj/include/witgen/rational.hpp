#ifndef WITGEN_RATIONAL_HPP
#define WITGEN_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace witgen {

// Exact arithmetic only; no floating point anywhere in the core.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q" with optional sign; throws parse_error on junk or q = 0.
Rational rational_from_string(const std::string& s);

// Canonical form: "p" for integers, "p/q" otherwise, q > 0.
std::string rational_to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

} // namespace witgen

#endif
