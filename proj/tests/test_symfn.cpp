#include "symid/qbinomial.hpp"
#include "symid/symmetric.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace symid;
using symid::testing::elem_sym_enumerated;

TEST_CASE("elem_sym basics") {
  CHECK(elem_sym(3, 2).str() == "x1*x2 + x1*x3 + x2*x3");
  CHECK(elem_sym(5, 0) == Polynomial::constant(x_vars(5), Rational(1)));
  CHECK(elem_sym(3, 4).is_zero());
  CHECK_THROWS_AS(elem_sym(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(elem_sym(0, 1), std::invalid_argument);
}

TEST_CASE("elem_sym recurrence matches subset enumeration") {
  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r <= n + 1; ++r) {
      CHECK(elem_sym(n, r) == elem_sym_enumerated(n, r));
    }
  }
}

TEST_CASE("e_r has C(n,r) square-free monomials") {
  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      const Polynomial e = elem_sym(n, r);
      CHECK(Int(static_cast<long long>(e.terms().size())) == binomial(n, r));
      for (const auto& term : e.terms()) {
        CHECK(term.coeff == 1);
        for (const auto exp : term.mono.exponents()) {
          CHECK(exp <= 1);
        }
        CHECK(term.mono.total_degree() == static_cast<std::uint64_t>(r));
      }
    }
  }
}

TEST_CASE("deleted elementary symmetric functions") {
  const auto vars = x_vars(3);
  CHECK(elem_sym_deleted(3, 1, 2) ==
        Polynomial::variable(vars, 0) + Polynomial::variable(vars, 2));
  CHECK(elem_sym_deleted(3, 0, 1) == Polynomial::constant(vars, Rational(1)));
  CHECK_THROWS_AS(elem_sym_deleted(3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(elem_sym_deleted(3, 1, 4), std::invalid_argument);

  // recombination spot check at n=4, r=2, i=3
  const auto v4 = x_vars(4);
  const Polynomial x3 = Polynomial::variable(v4, 2);
  CHECK(elem_sym(4, 2) == elem_sym_deleted(4, 2, 3) + x3 * elem_sym_deleted(4, 1, 3));

  // no monomial of a deleted function touches the deleted variable
  for (const auto& term : elem_sym_deleted(4, 2, 3).terms()) {
    CHECK(term.mono.exponent(2) == 0);
  }
}

TEST_CASE("recombination holds for all n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const SymTables tables = build_tables(n);
    for (int i = 1; i <= n; ++i) {
      const auto& del = tables.deleted[static_cast<std::size_t>(i - 1)];
      const Polynomial xi =
          Polynomial::variable(tables.full.at(0).vars(), static_cast<std::size_t>(i - 1));
      for (int r = 1; r <= n; ++r) {
        CHECK(tables.full.at(r) == del.at(r) + xi * del.at(r - 1));
      }
    }
  }
}

TEST_CASE("power sums") {
  const auto v3 = x_vars(3);
  CHECK(power_sum(3, 2).str() == "x1^2 + x2^2 + x3^2");
  CHECK(power_sum(2, 1) == elem_sym(2, 1));
  // Newton relation p_2 = e_1^2 - 2 e_2 at n=2
  CHECK(power_sum(2, 2) == elem_sym(2, 1).pow(2) - elem_sym(2, 2).scaled(Rational(2)));
  CHECK_THROWS_AS(power_sum(3, 0), std::invalid_argument);
}

TEST_CASE("generating function") {
  const auto vars = x_vars_plus(2, {"t"});
  const Polynomial one = Polynomial::constant(vars, Rational(1));
  const Polynomial x1 = Polynomial::variable(vars, 0);
  const Polynomial x2 = Polynomial::variable(vars, 1);
  const Polynomial t = Polynomial::variable(vars, 2);

  CHECK(gen_function(2, 2) == Series(one + (x1 + x2) * t + x1 * x2 * t * t, {2}, 2));
  CHECK(gen_function(3, 0) ==
        Series(Polynomial::constant(x_vars_plus(3, {"t"}), Rational(1)), {3}, 0));

  // e_r vanishes past n: cutoff 5 retains only degrees 0..3
  const Series g = gen_function(3, 5);
  CHECK(g.body().degree_in(3) == 3);
  CHECK_THROWS_AS(gen_function(2, -1), std::invalid_argument);
}

TEST_CASE("generating function product form equals sum form") {
  for (int n = 1; n <= 5; ++n) {
    const auto vars = x_vars_plus(n, {"t"});
    const std::size_t t_id = static_cast<std::size_t>(n);
    const Polynomial one = Polynomial::constant(vars, Rational(1));
    Polynomial prod = one;
    for (int i = 0; i < n; ++i) {
      prod *= one + Polynomial::variable(vars, static_cast<std::size_t>(i)) *
                        Polynomial::variable(vars, t_id);
    }
    for (int cutoff = 0; cutoff <= n + 2; ++cutoff) {
      CHECK(Series(prod, {t_id}, cutoff) == gen_function(n, cutoff));
    }
  }
}

TEST_CASE("build_tables") {
  const SymTables t1 = build_tables(1);
  CHECK(t1.full.at(0) == Polynomial::constant(x_vars(1), Rational(1)));
  CHECK(t1.full.at(1) == Polynomial::variable(x_vars(1), 0));
  CHECK(t1.deleted[0].at(0) == Polynomial::constant(x_vars(1), Rational(1)));

  const SymTables t3 = build_tables(3);
  for (int r = 0; r <= 3; ++r) {
    CHECK(t3.full.at(r) == elem_sym(3, r));
  }
  CHECK(t3.full.at(4).is_zero());
  CHECK(t3.full.at(-1).is_zero());

  const SymTables t4 = build_tables(4);
  CHECK(t4.deleted[0].at(2).terms().size() == 3);  // C(3,2)
  for (int i = 1; i <= 4; ++i) {
    for (int r = 0; r <= 3; ++r) {
      CHECK(t4.deleted[static_cast<std::size_t>(i - 1)].at(r) ==
            elem_sym_enumerated(4, r, i));
    }
  }
}

TEST_CASE("all-ones specialization counts subsets") {
  for (int n = 1; n <= 8; ++n) {
    const SymTables tables = build_tables(n);
    std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
    for (int r = 0; r <= n; ++r) {
      CHECK(tables.full.at(r).evaluate(ones) == Rational(binomial(n, r)));
    }
    for (int i = 1; i <= n; ++i) {
      for (int r = 0; r <= n - 1; ++r) {
        CHECK(tables.deleted[static_cast<std::size_t>(i - 1)].at(r).evaluate(ones) ==
              Rational(binomial(n - 1, r)));
      }
    }
  }
}
