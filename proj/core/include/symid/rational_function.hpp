#pragma once

#include "symid/polynomial.hpp"

namespace symid {

// Quotient of two polynomials, kept unreduced: no gcd cancellation is ever
// attempted. Equality is decided by cross-multiplication, which is exact
// and cheap at the sizes this library works at.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction from_poly(Polynomial p);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;

  RationalFunction remapped(const VarTablePtr& target) const;

  std::string str() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

// a/b == c/d  iff  a*d - c*b == 0.
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

}  // namespace symid
