#include "symid/grid.hpp"
#include "symid/identities.hpp"
#include "symid/qbinomial.hpp"
#include "symid/symmetric.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace symid;

TEST_CASE("eq11 series relation") {
  for (int n = 1; n <= 4; ++n) {
    for (int cutoff = n + 1; cutoff <= n + 3; ++cutoff) {
      CHECK(check_eq11(n, cutoff).pass);
    }
  }
  CHECK_THROWS_AS(check_eq11(3, 3), std::invalid_argument);
}

TEST_CASE("eq12 deleted sum collapses") {
  // n=3, p=2: both sides are 2 e_1
  const SymTables t3 = build_tables(3);
  Polynomial lhs = Polynomial::zero(t3.full.at(0).vars());
  for (int i = 0; i < 3; ++i) {
    lhs += t3.deleted[static_cast<std::size_t>(i)].at(1);
  }
  CHECK(lhs == t3.full.at(1).scaled(Rational(2)));

  for (int n = 1; n <= 8; ++n) {
    for (int p = 1; p <= n + 1; ++p) {
      CHECK(check_eq12(n, p).pass);
    }
  }
  // p = n+1 pits zero against zero
  CHECK(check_eq12(3, 4).pass);
  CHECK_THROWS_AS(check_eq12(3, 5), std::invalid_argument);
}

TEST_CASE("eq14 integer identity") {
  CHECK(Int(4) * binomial(3, 1) == Int(3) * binomial(4, 1));
  CHECK(check_eq14(4, 2).pass);
  CHECK(check_eq14(1, 1).pass);
  CHECK(Int(6) * binomial(5, 3) == 60);
  CHECK(Int(3) * binomial(6, 3) == 60);
  CHECK(check_eq14(6, 4).pass);
}

TEST_CASE("eq17 geometric specialization of eq12") {
  // n=2, p=1: both sides are the constant 2
  QPolynomial lhs;
  for (int i = 1; i <= 2; ++i) {
    lhs += deleted_elem_geometric(2, 1, i);
  }
  CHECK(lhs == QPolynomial::constant(Int(2)));
  CHECK(elem_geometric(2, 0).scaled(Int(2)) == QPolynomial::constant(Int(2)));

  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= n; ++p) {
      const auto rep = check_eq17(n, p);
      CHECK(rep.pass);
    }
  }

  // q = 1 reduces to the eq14 integers
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= n; ++p) {
      QPolynomial sum;
      for (int i = 1; i <= n; ++i) {
        sum += deleted_elem_geometric(n, p, i);
      }
      CHECK(sum.value_at_one() == Int(n) * binomial(n - 1, p - 1));
      CHECK(elem_geometric(n, p - 1).scaled(Int(n - p + 1)).value_at_one() ==
            Int(n - p + 1) * binomial(n, p - 1));
    }
  }
}

TEST_CASE("eq19 reindexed double sum") {
  // p=0 counts the variables
  CHECK(check_eq19(4, 0).pass);

  // n=3, p=1: both sides equal 2(1+q+q^2)
  const QPolynomial expected = q_integer(3).scaled(Int(2));
  CHECK(q_binomial(3, 1).scaled(Int(2)) == expected);
  CHECK(check_eq19(3, 1).pass);

  for (int n = 1; n <= 8; ++n) {
    for (int p = 0; p <= n - 1; ++p) {
      CHECK(check_eq19(n, p).pass);
    }
  }

  // q=1 reduction for n=5, p=2: (n-p) C(n,p) = 30
  CHECK(q_binomial(5, 2).scaled(Int(3)).value_at_one() == 30);
  CHECK_THROWS_AS(check_eq19(3, 3), std::invalid_argument);
}

TEST_CASE("eq24 two-parameter series relation") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(check_eq24(n, n + 2).pass);
    CHECK(check_eq24(n, n + 1).pass);
  }
  CHECK_THROWS_AS(check_eq24(2, 2), std::invalid_argument);
}

TEST_CASE("eq25 product identity") {
  // n=3, p=q=2: lhs (x2+x3)^2 + (x1+x3)^2 + (x1+x2)^2 = 2 e_1^2 - 2 e_2
  const SymTables t3 = build_tables(3);
  Polynomial lhs = Polynomial::zero(t3.full.at(0).vars());
  for (int i = 0; i < 3; ++i) {
    const auto& d = t3.deleted[static_cast<std::size_t>(i)];
    lhs += d.at(1) * d.at(1);
  }
  const Polynomial rhs =
      t3.full.at(1).pow(2).scaled(Rational(2)) - t3.full.at(2).scaled(Rational(2));
  CHECK(lhs == rhs);
  // both equal 2 sum x_i^2 + 2 sum_{i<j} x_i x_j
  CHECK(lhs == power_sum(3, 2).scaled(Rational(2)) + elem_sym(3, 2).scaled(Rational(2)));

  // n=2, p=q=2: lhs = x1^2 + x2^2 = e_1^2 - 2 e_2
  CHECK(check_eq25(2, 2, 2).pass);
  CHECK(check_eq25(5, 4, 3).pass);

  for (int n = 2; n <= 6; ++n) {
    for (int p = 2; p <= n + 1; ++p) {
      for (int q = 2; q <= p; ++q) {
        CHECK(check_eq25(n, p, q).pass);
      }
    }
  }

  CHECK_THROWS_AS(check_eq25(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_eq25(3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_eq25(3, 5, 2), std::invalid_argument);
}

TEST_CASE("eq26 all-ones specialization") {
  CHECK(check_eq26(3, 2, 2).pass);
  CHECK(Int(3) * binomial(2, 1) * binomial(2, 1) == 12);

  // n=4, p=3, q=2: lhs 36, rhs 48 - 12
  CHECK(Int(4) * binomial(3, 2) * binomial(3, 1) == 36);
  CHECK(Int(2) * binomial(4, 2) * binomial(4, 1) - Int(3) * binomial(4, 3) == 36);
  CHECK(check_eq26(4, 3, 2).pass);

  // specialization commutes: evaluating the eq25 sides at all-ones gives the
  // eq26 integers
  for (int n = 2; n <= 5; ++n) {
    const SymTables tables = build_tables(n);
    std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
    for (int p = 2; p <= n + 1; ++p) {
      for (int q = 2; q <= p; ++q) {
        Polynomial lhs = Polynomial::zero(tables.full.at(0).vars());
        for (int i = 0; i < n; ++i) {
          const auto& d = tables.deleted[static_cast<std::size_t>(i)];
          lhs += d.at(p - 1) * d.at(q - 1);
        }
        CHECK(lhs.evaluate(ones) ==
              Rational(Int(n) * binomial(n - 1, p - 1) * binomial(n - 1, q - 1)));
        CHECK(check_eq26(n, p, q).pass);
      }
    }
  }
}

TEST_CASE("eq27 rearranged binomial form") {
  for (int n = 1; n <= 8; ++n) {
    for (int p = 2; p <= n + 2; ++p) {
      for (int q = 2; q <= p; ++q) {
        CHECK(check_eq27(n, p, q).pass);
      }
    }
  }
  CHECK_THROWS_AS(check_eq27(3, 2, 1), std::invalid_argument);
}

TEST_CASE("eq28 printed Pascal form fails where it should") {
  const auto rep = check_eq28(5, 3);
  CHECK_FALSE(rep.pass);
  CHECK(rep.diff == "-1");  // lhs 4, rhs 5
  CHECK(rep.note.find("C(n-1,q-2) holds") != std::string::npos);
  CHECK(eq28_corrected_holds(5, 3));

  // the printed form survives only q <= 2
  for (int n = 1; n <= 10; ++n) {
    for (int q = 1; q <= n + 2; ++q) {
      const bool printed_ok = check_eq28(n, q).pass;
      CHECK(printed_ok == (q <= 2 || binomial(n - 1, q - 3) == 0));
      CHECK(eq28_corrected_holds(n, q));
    }
  }
}

TEST_CASE("eq29 binomial convolution") {
  CHECK(binomial(4, 1) * binomial(4, 2) == 24);
  const auto rep = check_eq29(4, 2, 2);
  CHECK(rep.pass);

  CHECK(check_eq29(3, 0, 0).pass);  // lhs C(n,-1) = 0
  CHECK(check_eq29(6, 4, 3).pass);

  for (int n = 1; n <= 8; ++n) {
    for (int p = 0; p <= 2 * n; ++p) {
      for (int q = 0; q <= std::min(p, 2 * n - p); ++q) {
        CHECK(check_eq29(n, p, q).pass);
      }
    }
  }
  CHECK_THROWS_AS(check_eq29(3, 1, 2), std::invalid_argument);
}

TEST_CASE("catalog expansion") {
  CHECK(catalog_ids().size() == 12);
  CHECK(is_catalog_id("eq25"));
  CHECK_FALSE(is_catalog_id("nosuch"));
  CHECK_THROWS_AS(expand_instances("nosuch", {1, 2}, {}, {}, {}, {}),
                  std::invalid_argument);

  // default grid for eq12 at n=3 covers p=1..4
  const auto eq12_grid = expand_instances("eq12", {3, 3}, {}, {}, {}, {});
  CHECK(eq12_grid.size() == 4);
  CHECK(eq12_grid.front().p == 1);
  CHECK(eq12_grid.back().p == 4);

  // explicit out-of-domain parameters are a usage error, not a skip
  CHECK_THROWS_AS(expand_instances("eq25", {3, 3}, IntRange{1, 1}, IntRange{1, 1}, {}, {}),
                  std::invalid_argument);
  // unused parameters are rejected
  CHECK_THROWS_AS(expand_instances("eq11", {3, 3}, IntRange{1, 2}, {}, {}, {}),
                  std::invalid_argument);
  // empty range
  CHECK_THROWS_AS(expand_instances("eq12", {3, 2}, {}, {}, {}, {}),
                  std::invalid_argument);
}

TEST_CASE("grid runner is deterministic across worker counts") {
  const auto instances = expand_instances("eq25", {2, 5}, {}, {}, {}, {});
  const auto serial = run_instances(instances, 1);
  const auto parallel = run_instances(instances, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].id == parallel[k].id);
    CHECK(serial[k].params == parallel[k].params);
    CHECK(serial[k].pass == parallel[k].pass);
    CHECK(serial[k].diff == parallel[k].diff);
  }
  CHECK(summarize(serial).passes == serial.size());
}

TEST_CASE("worker resolution") {
  CHECK(resolve_worker_count(3) == 3);
  CHECK_THROWS_AS(resolve_worker_count(0), std::invalid_argument);
  CHECK(resolve_worker_count(std::nullopt) >= 1);
}
