#include "symid/qbinomial.hpp"

#include "symid/symmetric.hpp"

#include <stdexcept>
#include <vector>

namespace symid {

Int binomial(int n, int k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be >= 0");
  }
  if (k < 0 || k > n) {
    return Int(0);
  }
  std::vector<Int> row(static_cast<std::size_t>(n) + 1, Int(0));
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = m; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

QPolynomial q_integer(int n) {
  if (n < 0) {
    throw std::invalid_argument("q_integer: n must be >= 0");
  }
  return QPolynomial(std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
}

QPolynomial q_factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("q_factorial: n must be >= 0");
  }
  QPolynomial out = QPolynomial::one();
  for (int m = 1; m <= n; ++m) {
    out *= q_integer(m);
  }
  return out;
}

QPolynomial q_binomial(int n, int k) {
  if (n < 0) {
    throw std::invalid_argument("q_binomial: n must be >= 0");
  }
  if (k < 0 || k > n) {
    return QPolynomial::zero();
  }
  // Row m of the q-Pascal triangle: [m, 0..m].
  std::vector<QPolynomial> row{QPolynomial::one()};
  for (int m = 1; m <= n; ++m) {
    std::vector<QPolynomial> next;
    next.reserve(static_cast<std::size_t>(m) + 1);
    next.push_back(QPolynomial::one());
    for (int j = 1; j < m; ++j) {
      next.push_back(row[static_cast<std::size_t>(j - 1)] +
                     row[static_cast<std::size_t>(j)].shifted(static_cast<std::size_t>(j)));
    }
    next.push_back(QPolynomial::one());
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

QPolynomial q_binomial_ratio(int n, int k) {
  if (n < 0) {
    throw std::invalid_argument("q_binomial_ratio: n must be >= 0");
  }
  if (k < 0 || k > n) {
    return QPolynomial::zero();
  }
  auto [quot, rem] = qpoly_divmod(q_factorial(n), q_factorial(k) * q_factorial(n - k));
  if (!rem.is_zero()) {
    throw std::logic_error("q_binomial_ratio: factorial ratio is not a polynomial");
  }
  return quot;
}

QPolynomial eval_at_q_powers(const Polynomial& p, std::span<const int> exponents) {
  QPolynomial out;
  for (const auto& t : p.terms()) {
    if (!is_integer(t.coeff)) {
      throw std::invalid_argument("eval_at_q_powers: non-integer coefficient");
    }
    long long power = 0;
    const auto& exps = t.mono.exponents();
    for (std::size_t id = 0; id < exps.size(); ++id) {
      if (exps[id] == 0) {
        continue;
      }
      if (id >= exponents.size()) {
        throw std::invalid_argument("eval_at_q_powers: no exponent for variable '" +
                                    p.vars()->name(id) + "'");
      }
      if (exponents[id] < 0) {
        throw std::invalid_argument("eval_at_q_powers: negative exponent");
      }
      power += static_cast<long long>(exps[id]) * exponents[id];
    }
    out += QPolynomial::monomial(static_cast<std::size_t>(power), numerator(t.coeff));
  }
  return out;
}

namespace {

std::vector<int> geometric_exponents(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i)] = i;
  }
  return e;
}

}  // namespace

QPolynomial elem_geometric(int n, int p) {
  if (n < 1 || p < 0 || p > n) {
    throw std::invalid_argument("elem_geometric: p out of range");
  }
  const int shift = p * (p - 1) / 2;
  return q_binomial(n, p).shifted(static_cast<std::size_t>(shift));
}

QPolynomial deleted_elem_geometric(int n, int p, int i) {
  if (n < 1 || i < 1 || i > n || p < 1 || p > n) {
    throw std::invalid_argument("deleted_elem_geometric: parameter out of range");
  }
  const auto exps = geometric_exponents(n);
  return eval_at_q_powers(elem_sym_deleted(n, p - 1, i), exps);
}

QPolynomial deleted_elem_geometric_closed(int n, int p, int i) {
  if (n < 1 || i < 1 || i > n || p < 1 || p > n) {
    throw std::invalid_argument("deleted_elem_geometric_closed: parameter out of range");
  }
  QPolynomial sum;
  for (int u = 0; u <= p - 1; ++u) {
    const QPolynomial factor = q_binomial(n - i, u) * q_binomial(i - 1, p - 1 - u);
    if (factor.is_zero()) {
      continue;
    }
    const long long expo = static_cast<long long>(u) * (u - (p - i - 1));
    if (expo < 0) {
      throw std::logic_error("deleted_elem_geometric_closed: negative exponent on support");
    }
    sum += factor.shifted(static_cast<std::size_t>(expo));
  }
  const int shift = (p - 1) * (p - 2) / 2;
  return sum.shifted(static_cast<std::size_t>(shift));
}

}  // namespace symid
