#include "symid/qpolynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symid {

QPolynomial QPolynomial::constant(Int c) {
  std::vector<Int> v;
  v.push_back(std::move(c));
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::monomial(std::size_t power, Int coeff) {
  std::vector<Int> v(power + 1, Int(0));
  v[power] = std::move(coeff);
  return QPolynomial(std::move(v));
}

const Int& QPolynomial::coeff(std::size_t power) const {
  static const Int kZero(0);
  return power < coeffs_.size() ? coeffs_[power] : kZero;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = coeff(k) + o.coeff(k);
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + (-o); }

QPolynomial QPolynomial::operator-() const {
  std::vector<Int> out = coeffs_;
  for (auto& c : out) {
    c = -c;
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) {
    return {};
  }
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::scaled(const Int& c) const {
  std::vector<Int> out = coeffs_;
  for (auto& v : out) {
    v *= c;
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) {
    return k == 0 ? *this : QPolynomial{};
  }
  std::vector<Int> out(coeffs_.size() + k, Int(0));
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return QPolynomial(std::move(out));
}

bool QPolynomial::palindromic() const {
  for (std::size_t k = 0; k < coeffs_.size() / 2; ++k) {
    if (coeffs_[k] != coeffs_[coeffs_.size() - 1 - k]) {
      return false;
    }
  }
  return true;
}

Rational QPolynomial::evaluate(const Rational& q) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + Rational(*it);
  }
  return acc;
}

Int QPolynomial::value_at_one() const {
  Int acc(0);
  for (const auto& c : coeffs_) {
    acc += c;
  }
  return acc;
}

std::string QPolynomial::str() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) {
      continue;
    }
    const bool negative = coeffs_[k] < 0;
    const Int mag = negative ? Int(-coeffs_[k]) : coeffs_[k];
    if (first) {
      if (negative) {
        os << "-";
      }
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1 || k == 0) {
      os << mag.str();
      if (k > 0) {
        os << "*";
      }
    }
    if (k == 1) {
      os << "q";
    } else if (k > 1) {
      os << "q^" << k;
    }
  }
  return os.str();
}

std::pair<QPolynomial, QPolynomial> qpoly_divmod(const QPolynomial& a,
                                                 const QPolynomial& b) {
  if (b.is_zero()) {
    throw std::invalid_argument("qpoly_divmod: division by zero polynomial");
  }
  std::vector<Int> rem(a.coeffs());
  const auto& div = b.coeffs();
  const Int& lead = div.back();
  if (static_cast<int>(rem.size()) < static_cast<int>(div.size())) {
    return {QPolynomial::zero(), a};
  }
  std::vector<Int> quot(rem.size() - div.size() + 1, Int(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Int& top = rem[k + div.size() - 1];
    if (top == 0) {
      continue;
    }
    if (top % lead != 0) {
      throw std::invalid_argument("qpoly_divmod: non-exact leading division");
    }
    const Int factor = top / lead;
    quot[k] = factor;
    for (std::size_t j = 0; j < div.size(); ++j) {
      rem[k + j] -= factor * div[j];
    }
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

}  // namespace symid
