#include "symid/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace symid {

namespace {

std::uint64_t param_degree(const Monomial& m, const std::vector<std::size_t>& params) {
  std::uint64_t d = 0;
  for (const std::size_t id : params) {
    d += m.exponent(id);
  }
  return d;
}

Polynomial truncate(const Polynomial& p, const std::vector<std::size_t>& params,
                    int cutoff) {
  std::vector<Polynomial::Term> kept;
  kept.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    if (param_degree(t.mono, params) <= static_cast<std::uint64_t>(cutoff)) {
      kept.push_back(t);
    }
  }
  return Polynomial::from_terms(p.vars(), std::move(kept));
}

void require_compatible(const Series& a, const Series& b) {
  if (!same_vars(a.body().vars(), b.body().vars()) || a.params() != b.params()) {
    throw std::invalid_argument("series: incompatible rings or parameter sets");
  }
}

}  // namespace

Series::Series(Polynomial body, std::vector<std::size_t> params, int cutoff)
    : body_(Polynomial::zero(body.vars())), params_(std::move(params)), cutoff_(cutoff) {
  if (cutoff < 0) {
    throw std::invalid_argument("series: negative cutoff");
  }
  std::sort(params_.begin(), params_.end());
  params_.erase(std::unique(params_.begin(), params_.end()), params_.end());
  for (const std::size_t id : params_) {
    if (id >= body.vars()->size()) {
      throw std::invalid_argument("series: parameter id out of range");
    }
  }
  body_ = truncate(body, params_, cutoff_);
}

Series Series::operator+(const Series& o) const {
  require_compatible(*this, o);
  const int c = std::min(cutoff_, o.cutoff_);
  return Series(body_ + o.body_, params_, c);
}

Series Series::operator-(const Series& o) const {
  require_compatible(*this, o);
  const int c = std::min(cutoff_, o.cutoff_);
  return Series(body_ - o.body_, params_, c);
}

Series Series::operator-() const { return Series(-body_, params_, cutoff_); }

Series Series::scaled(const Rational& c) const {
  return Series(body_.scaled(c), params_, cutoff_);
}

Series Series::derivative(std::size_t id) const {
  return Series(body_.derivative(id), params_, cutoff_);
}

bool Series::operator==(const Series& o) const {
  return cutoff_ == o.cutoff_ && params_ == o.params_ && body_ == o.body_;
}

Series series_mul(const Series& a, const Series& b, int cutoff) {
  if (cutoff < 0) {
    throw std::invalid_argument("series_mul: negative cutoff");
  }
  require_compatible(a, b);
  const Series ta(a.body(), a.params(), std::min(a.cutoff(), cutoff));
  const Series tb(b.body(), b.params(), std::min(b.cutoff(), cutoff));
  return Series(ta.body() * tb.body(), a.params(), cutoff);
}

}  // namespace symid
