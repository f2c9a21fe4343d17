#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

namespace symid {

// Exponent vector indexed by variable id. Trailing zero exponents are
// stripped, so equality is structural and the unit monomial is the empty
// vector.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exps_(std::move(exponents)) {
    strip();
  }

  static Monomial variable(std::size_t id, std::uint32_t power = 1) {
    if (power == 0) {
      return {};
    }
    std::vector<std::uint32_t> e(id + 1, 0);
    e[id] = power;
    return Monomial(std::move(e));
  }

  std::uint32_t exponent(std::size_t id) const {
    return id < exps_.size() ? exps_[id] : 0;
  }

  // 1 + largest id carrying a nonzero exponent (0 for the unit monomial).
  std::size_t width() const { return exps_.size(); }

  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool is_unit() const { return exps_.empty(); }

  std::uint64_t total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  Monomial operator*(const Monomial& o) const {
    std::vector<std::uint32_t> e(std::max(exps_.size(), o.exps_.size()), 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = exponent(k) + o.exponent(k);
    }
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  // Graded lexicographic: total degree decides first, ties are broken
  // lexicographically from variable 0.
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = total_degree() <=> o.total_degree(); c != 0) {
      return c;
    }
    const std::size_t n = std::max(exps_.size(), o.exps_.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (auto c = exponent(k) <=> o.exponent(k); c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  void strip() {
    while (!exps_.empty() && exps_.back() == 0) {
      exps_.pop_back();
    }
  }

  std::vector<std::uint32_t> exps_;
};

}  // namespace symid
