#include "symid/partial_fractions.hpp"

#include "symid/symmetric.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace symid {

namespace {

// Clearing prod_k (1 + x t_k) from the defining relation and matching powers
// of x yields, for s = 1..m,
//   sum_j e_{s-1}(t with t_j omitted) f_j = -e_s(t_1..t_m),
// a linear system whose entries are elementary symmetric functions of the
// formal parameters.
std::vector<std::vector<RationalFunction>> build_system(const VarTablePtr& tv, int m) {
  std::vector<std::size_t> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), std::size_t{0});

  std::vector<std::vector<RationalFunction>> rows;
  rows.reserve(static_cast<std::size_t>(m));
  for (int s = 1; s <= m; ++s) {
    std::vector<RationalFunction> row;
    row.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j < m; ++j) {
      auto ids = all;
      ids.erase(ids.begin() + j);
      row.push_back(RationalFunction::from_poly(elem_sym_of(tv, ids, s - 1)));
    }
    row.push_back(RationalFunction::from_poly(-elem_sym_of(tv, all, s)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RationalFunction> solve(std::vector<std::vector<RationalFunction>> m_aug) {
  const std::size_t n = m_aug.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m_aug[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == n) {
      throw std::logic_error("partial_fractions: singular system");
    }
    std::swap(m_aug[col], m_aug[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m_aug[row][col].is_zero()) {
        continue;
      }
      const RationalFunction factor = m_aug[row][col] / m_aug[col][col];
      for (std::size_t k = col; k <= n; ++k) {
        m_aug[row][k] = m_aug[row][k] - factor * m_aug[col][k];
      }
    }
  }
  std::vector<RationalFunction> out(
      n, RationalFunction::from_poly(Polynomial::zero(m_aug[0][0].num().vars())));
  for (std::size_t row = n; row-- > 0;) {
    RationalFunction acc = m_aug[row][n];
    for (std::size_t k = row + 1; k < n; ++k) {
      acc = acc - m_aug[row][k] * out[k];
    }
    out[row] = acc / m_aug[row][row];
  }
  return out;
}

void verify(const PartialFractionDecomp& d) {
  const int m = d.order;
  std::vector<std::string> names{"x"};
  for (int j = 1; j <= m; ++j) {
    names.push_back("t" + std::to_string(j));
  }
  const auto ring = make_vars(std::move(names));
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial one = Polynomial::constant(ring, Rational(1));

  std::vector<Polynomial> poles;
  Polynomial prod = one;
  for (int j = 0; j < m; ++j) {
    poles.push_back(one + x * Polynomial::variable(ring, static_cast<std::size_t>(j) + 1));
    prod *= poles.back();
  }

  RationalFunction rhs = RationalFunction::from_poly(one);
  for (int j = 0; j < m; ++j) {
    const RationalFunction fj = d.f[static_cast<std::size_t>(j)].remapped(ring);
    rhs = rhs + fj * RationalFunction(x, poles[static_cast<std::size_t>(j)]);
  }
  if (!rf_equal(RationalFunction(one, prod), rhs)) {
    throw std::logic_error("partial_fractions: decomposition failed verification");
  }
}

}  // namespace

PartialFractionDecomp partial_fractions(int order) {
  if (order != 2 && order != 3) {
    throw std::invalid_argument("partial_fractions: order must be 2 or 3");
  }
  std::vector<std::string> names;
  for (int j = 1; j <= order; ++j) {
    names.push_back("t" + std::to_string(j));
  }
  PartialFractionDecomp d;
  d.order = order;
  d.t_vars = make_vars(std::move(names));
  d.f = solve(build_system(d.t_vars, order));
  verify(d);
  return d;
}

}  // namespace symid
