#include "symid/qbinomial.hpp"
#include "symid/symmetric.hpp"

#include <doctest.h>

#include <vector>

using namespace symid;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(12, 6) == 924);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("q-integers") {
  CHECK(q_integer(3).str() == "1 + q + q^2");
  CHECK(q_integer(1) == QPolynomial::one());
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(4).value_at_one() == 4);
  CHECK_THROWS_AS(q_integer(-2), std::invalid_argument);
}

TEST_CASE("q-binomial by recurrence") {
  CHECK(q_binomial(4, 2).str() == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(q_binomial(7, 0) == QPolynomial::one());
  CHECK(q_binomial(3, 5).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(4, 2).value_at_one() == 6);
}

TEST_CASE("q-binomial recurrence agrees with the factorial ratio") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) == q_binomial_ratio(n, k));
    }
  }
}

TEST_CASE("q-binomials are palindromic of degree k(n-k)") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const QPolynomial b = q_binomial(n, k);
      CHECK(b.palindromic());
      CHECK(b.degree() == k * (n - k));
      for (const auto& c : b.coeffs()) {
        CHECK(c >= 0);
      }
      CHECK(b.value_at_one() == binomial(n, k));
    }
  }
}

TEST_CASE("q-Pascal symmetric twin") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const QPolynomial twin =
          q_binomial(n - 1, k) +
          (k >= 1 ? q_binomial(n - 1, k - 1).shifted(static_cast<std::size_t>(n - k))
                  : QPolynomial::zero());
      CHECK(q_binomial(n, k) == twin);
    }
  }
}

TEST_CASE("qpoly divmod") {
  const QPolynomial num = q_integer(6);       // 1+q+...+q^5
  const QPolynomial den = q_integer(3);       // 1+q+q^2
  auto [quot, rem] = qpoly_divmod(num, den);
  CHECK(rem.is_zero());
  CHECK(quot == QPolynomial(std::vector<Int>{Int(1), Int(0), Int(0), Int(1)}));
  CHECK_THROWS_AS(qpoly_divmod(num, QPolynomial::zero()), std::invalid_argument);
}

TEST_CASE("geometric specialization of e_p") {
  CHECK(elem_geometric(3, 2).str() == "q + q^2 + q^3");
  CHECK(elem_geometric(9, 0) == QPolynomial::one());
  CHECK(elem_geometric(3, 2).value_at_one() == 3);
  CHECK_THROWS_AS(elem_geometric(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(elem_geometric(3, -1), std::invalid_argument);
}

TEST_CASE("closed form equals substitution for e_p(1,q,...,q^{n-1})") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      exps[static_cast<std::size_t>(i)] = i;
    }
    for (int p = 0; p <= n; ++p) {
      CHECK(elem_geometric(n, p) == eval_at_q_powers(elem_sym(n, p), exps));
    }
  }
}

TEST_CASE("deleted geometric specialization") {
  CHECK(deleted_elem_geometric(3, 2, 2).str() == "1 + q^2");
  CHECK(deleted_elem_geometric(2, 1, 1) == QPolynomial::one());
  CHECK_THROWS_AS(deleted_elem_geometric(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(deleted_elem_geometric(3, 2, 4), std::invalid_argument);

  for (int n = 1; n <= 7; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int p = 1; p <= n; ++p) {
        CHECK(deleted_elem_geometric(n, p, i).value_at_one() == binomial(n - 1, p - 1));
      }
    }
  }
}

TEST_CASE("resolved closed form matches direct substitution") {
  // settles the exponent reading u(u-(p-i-1)) across the full grid
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int p = 1; p <= n; ++p) {
        CHECK(deleted_elem_geometric_closed(n, p, i) == deleted_elem_geometric(n, p, i));
      }
    }
  }
}

TEST_CASE("eval_at_q_powers rejects bad input") {
  const auto vars = x_vars(2);
  const Polynomial half =
      Polynomial::constant(vars, make_rational(Int(1), Int(2)));
  std::vector<int> exps{0, 1};
  CHECK_THROWS_AS(eval_at_q_powers(half, exps), std::invalid_argument);

  const Polynomial p = Polynomial::variable(vars, 1);
  std::vector<int> short_exps{0};
  CHECK_THROWS_AS(eval_at_q_powers(p, short_exps), std::invalid_argument);
}
