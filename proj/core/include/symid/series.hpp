#pragma once

#include "symid/polynomial.hpp"

#include <vector>

namespace symid {

// Polynomial truncated at a total-degree cutoff in a designated set of
// formal parameters (t, or t1..t3). Terms whose formal-parameter degree
// exceeds the cutoff are dropped on construction and after every product.
class Series {
 public:
  Series(Polynomial body, std::vector<std::size_t> params, int cutoff);

  const Polynomial& body() const { return body_; }
  const std::vector<std::size_t>& params() const { return params_; }
  int cutoff() const { return cutoff_; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series scaled(const Rational& c) const;
  Series derivative(std::size_t id) const;

  bool operator==(const Series& o) const;

  std::string str() const { return body_.str(); }

 private:
  Polynomial body_;
  std::vector<std::size_t> params_;  // sorted, unique
  int cutoff_;
};

// Product truncated at `cutoff`; the inputs must share a variable table and
// parameter set and are themselves truncated to `cutoff` first.
Series series_mul(const Series& a, const Series& b, int cutoff);

}  // namespace symid
