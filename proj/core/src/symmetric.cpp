#include "symid/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symid {

namespace {

// Full row e_0..e_max over the listed variables via the prefix recurrence.
std::vector<Polynomial> elem_sym_row(const VarTablePtr& vars,
                                     std::span<const std::size_t> ids, int max_r) {
  std::vector<Polynomial> row;
  row.reserve(static_cast<std::size_t>(max_r) + 1);
  row.push_back(Polynomial::constant(vars, Rational(1)));
  for (int r = 1; r <= max_r; ++r) {
    row.push_back(Polynomial::zero(vars));
  }
  int used = 0;
  for (const std::size_t id : ids) {
    const Polynomial x = Polynomial::variable(vars, id);
    ++used;
    for (int r = std::min(max_r, used); r >= 1; --r) {
      row[static_cast<std::size_t>(r)] += x * row[static_cast<std::size_t>(r - 1)];
    }
  }
  return row;
}

void check_n(int n) {
  if (n < 1) {
    throw std::invalid_argument("symmetric functions: n must be >= 1");
  }
}

std::vector<std::size_t> first_ids(int n) {
  std::vector<std::size_t> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return ids;
}

}  // namespace

Polynomial elem_sym_of(const VarTablePtr& vars, std::span<const std::size_t> ids, int r) {
  if (r < 0) {
    throw std::invalid_argument("elem_sym: negative degree");
  }
  if (r > static_cast<int>(ids.size())) {
    return Polynomial::zero(vars);
  }
  return elem_sym_row(vars, ids, r)[static_cast<std::size_t>(r)];
}

Polynomial elem_sym(int n, int r) {
  check_n(n);
  return elem_sym_of(x_vars(n), first_ids(n), r);
}

Polynomial elem_sym_deleted(int n, int r, int i) {
  check_n(n);
  if (i < 1 || i > n) {
    throw std::invalid_argument("elem_sym_deleted: deleted index out of range");
  }
  auto ids = first_ids(n);
  ids.erase(ids.begin() + (i - 1));
  return elem_sym_of(x_vars(n), ids, r);
}

Polynomial power_sum(int n, int r) {
  check_n(n);
  if (r < 1) {
    throw std::invalid_argument("power_sum: degree must be >= 1");
  }
  const auto vars = x_vars(n);
  Polynomial out = Polynomial::zero(vars);
  for (int i = 0; i < n; ++i) {
    out += Polynomial::term(vars, Monomial::variable(static_cast<std::size_t>(i),
                                                     static_cast<std::uint32_t>(r)),
                            Rational(1));
  }
  return out;
}

Series gen_function(int n, int cutoff) {
  check_n(n);
  if (cutoff < 0) {
    throw std::invalid_argument("gen_function: negative cutoff");
  }
  const auto vars = x_vars_plus(n, {"t"});
  const std::size_t t_id = static_cast<std::size_t>(n);
  const int top = std::min(n, cutoff);
  auto row = elem_sym_row(vars, first_ids(n), top);
  Polynomial body = Polynomial::zero(vars);
  for (int r = 0; r <= top; ++r) {
    body += row[static_cast<std::size_t>(r)] *
            Polynomial::term(vars, Monomial::variable(t_id, static_cast<std::uint32_t>(r)),
                             Rational(1));
  }
  return Series(std::move(body), {t_id}, cutoff);
}

SymTables build_tables(int n) {
  check_n(n);
  const auto vars = x_vars(n);
  const auto all = first_ids(n);

  std::vector<DeletedElemSymTable> deleted;
  deleted.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto ids = all;
    ids.erase(ids.begin() + (i - 1));
    deleted.emplace_back(n, i, elem_sym_row(vars, ids, n - 1));
  }
  return SymTables{ElemSymTable(n, elem_sym_row(vars, all, n)), std::move(deleted)};
}

}  // namespace symid
