#include "symid/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace symid {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!same_vars(num_.vars(), den_.vars())) {
    throw std::invalid_argument("rational function: incompatible variable tables");
  }
  if (den_.is_zero()) {
    throw std::invalid_argument("rational function: zero denominator");
  }
}

RationalFunction RationalFunction::from_poly(Polynomial p) {
  Polynomial one = Polynomial::constant(p.vars(), Rational(1));
  return {std::move(p), std::move(one)};
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) {
    throw std::invalid_argument("rational function: division by zero");
  }
  return {num_ * o.den_, den_ * o.num_};
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_}; }

RationalFunction RationalFunction::remapped(const VarTablePtr& target) const {
  return {num_.remapped(target), den_.remapped(target)};
}

std::string RationalFunction::str() const {
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
  return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

}  // namespace symid
