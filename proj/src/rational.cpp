#include "witgen/rational.hpp"

#include "witgen/errors.hpp"

namespace witgen {

Rational rational_from_string(const std::string& s) {
  if (s.empty())
    throw parse_error("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw parse_error("bad rational literal: '" + s + "'");
  if (r.get_den() == 0)
    throw parse_error("zero denominator in rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1)
    return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace witgen
