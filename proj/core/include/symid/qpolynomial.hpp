#pragma once

#include "symid/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace symid {

// Univariate polynomial in q with exact integer coefficients, stored densely
// by ascending power. Trailing zero coefficients are stripped, so the zero
// polynomial is the empty vector and equality is structural.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

  static QPolynomial zero() { return {}; }
  static QPolynomial one() { return constant(1); }
  static QPolynomial constant(Int c);
  static QPolynomial monomial(std::size_t power, Int coeff = Int(1));

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coeff(std::size_t power) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
  QPolynomial& operator-=(const QPolynomial& o) { return *this = *this - o; }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  QPolynomial scaled(const Int& c) const;
  // Multiplication by q^k.
  QPolynomial shifted(std::size_t k) const;

  bool palindromic() const;

  Rational evaluate(const Rational& q) const;
  // Value at q = 1: the coefficient sum.
  Int value_at_one() const;

  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

  // Canonical rendering by ascending power: "1 + q + 2*q^2 + q^3 + q^4".
  std::string str() const;

 private:
  void strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
    }
  }

  std::vector<Int> coeffs_;
};

// Euclidean division a = q*b + r with deg r < deg b. Requires each leading
// reduction step to divide exactly over the integers (always true for the
// monic divisors this library uses); throws std::invalid_argument otherwise,
// or when b is zero.
std::pair<QPolynomial, QPolynomial> qpoly_divmod(const QPolynomial& a,
                                                 const QPolynomial& b);

}  // namespace symid
