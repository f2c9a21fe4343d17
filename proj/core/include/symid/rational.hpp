#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace symid {

// Exact arbitrary-precision scalars. Rational values are always held in
// canonical form: reduced, denominator > 0.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Int num, Int den) {
  if (den == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  return Rational(std::move(num)) / Rational(std::move(den));
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
  using boost::multiprecision::pow;
  if (exp == 0) {
    return Rational(1);
  }
  // Power of a canonical fraction is canonical, so numerator and
  // denominator can be raised independently.
  Rational out(pow(numerator(base), exp));
  out /= Rational(pow(denominator(base), exp));
  return out;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace symid
