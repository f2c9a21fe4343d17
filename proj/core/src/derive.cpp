#include "symid/derive.hpp"

#include "symid/partial_fractions.hpp"
#include "symid/symmetric.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <string>

namespace symid {

namespace {

using Coefficients = std::map<std::vector<int>, Rational, std::greater<std::vector<int>>>;

void check_degrees(int n, std::span<const int> degrees, std::size_t min_len,
                   std::size_t max_len) {
  if (n < 1) {
    throw std::invalid_argument("derive: n must be >= 1");
  }
  if (degrees.size() < min_len || degrees.size() > max_len) {
    throw std::invalid_argument("derive: unsupported number of degrees");
  }
  for (const int d : degrees) {
    if (d < 1 || d > n) {
      throw std::invalid_argument("derive: degree " + std::to_string(d) +
                                  " outside 1.." + std::to_string(n));
    }
  }
}

// The decomposition depends only on the order; solve and verify it once.
// Magic statics make the cache safe to touch from concurrent grid workers.
const PartialFractionDecomp& cached_partial_fractions(int order) {
  if (order == 2) {
    static const PartialFractionDecomp d = partial_fractions(2);
    return d;
  }
  static const PartialFractionDecomp d = partial_fractions(3);
  return d;
}

// Splits a polynomial of the ring (E_0..E_n, t_1..t_m) into buckets keyed by
// the t-exponent tuple; bucket values have the t part stripped.
std::map<std::vector<int>, Polynomial> bucket_by_t(const Polynomial& p,
                                                   std::size_t t_first, int m) {
  std::map<std::vector<int>, Polynomial> out;
  for (const auto& term : p.terms()) {
    std::vector<int> key(static_cast<std::size_t>(m), 0);
    auto exps = term.mono.exponents();
    for (int k = 0; k < m; ++k) {
      const std::size_t id = t_first + static_cast<std::size_t>(k);
      key[static_cast<std::size_t>(k)] = static_cast<int>(term.mono.exponent(id));
      if (id < exps.size()) {
        exps[id] = 0;
      }
    }
    const Polynomial piece =
        Polynomial::term(p.vars(), Monomial(std::move(exps)), term.coeff);
    auto [it, inserted] = out.try_emplace(std::move(key), piece);
    if (!inserted) {
      it->second += piece;
    }
  }
  return out;
}

}  // namespace

DerivedIdentity derive_identity(int n, std::span<const int> degrees) {
  check_degrees(n, degrees, 2, 3);
  const int m = static_cast<int>(degrees.size());

  const PartialFractionDecomp& pf = cached_partial_fractions(m);

  // Ring: E_0..E_n at ids 0..n, then t_1..t_m.
  std::vector<std::string> names;
  for (int r = 0; r <= n; ++r) {
    names.push_back("e" + std::to_string(r));
  }
  for (int j = 1; j <= m; ++j) {
    names.push_back("t" + std::to_string(j));
  }
  const auto ring = make_vars(std::move(names));
  const std::size_t t_first = static_cast<std::size_t>(n) + 1;

  // E(t_k) = sum_r E_r t_k^r and its t-derivative, as symbol series.
  std::vector<Polynomial> e_series, e_deriv;
  for (int k = 0; k < m; ++k) {
    const std::size_t t_id = t_first + static_cast<std::size_t>(k);
    Polynomial s = Polynomial::zero(ring);
    Polynomial ds = Polynomial::zero(ring);
    for (int r = 0; r <= n; ++r) {
      const Polynomial er = Polynomial::variable(ring, static_cast<std::size_t>(r));
      s += er * Polynomial::term(ring, Monomial::variable(t_id, static_cast<std::uint32_t>(r)),
                                 Rational(1));
      if (r >= 1) {
        ds += er * Polynomial::term(
                       ring, Monomial::variable(t_id, static_cast<std::uint32_t>(r - 1)),
                       Rational(r));
      }
    }
    e_series.push_back(std::move(s));
    e_deriv.push_back(std::move(ds));
  }

  // Clear every pole with D = prod_{j<k} (t_j - t_k): each f_j D is a
  // polynomial (the solver's pair reduces onto D by exact division).
  Polynomial d_all = Polynomial::constant(ring, Rational(1));
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      d_all *= Polynomial::variable(ring, t_first + static_cast<std::size_t>(j)) -
               Polynomial::variable(ring, t_first + static_cast<std::size_t>(k));
    }
  }
  std::vector<Polynomial> f_cleared;
  for (int j = 0; j < m; ++j) {
    const Polynomial num = pf.f[static_cast<std::size_t>(j)].num().remapped(ring);
    const Polynomial den = pf.f[static_cast<std::size_t>(j)].den().remapped(ring);
    f_cleared.push_back(divide_exact(num * d_all, den));
  }

  // R = D * (n prod_k E(t_k) + sum_j f_j E'(t_j) prod_{k!=j} E(t_k)).
  Polynomial prod_all = Polynomial::constant(ring, Rational(1));
  for (const auto& s : e_series) {
    prod_all *= s;
  }
  Polynomial rhs = d_all * prod_all.scaled(Rational(n));
  for (int j = 0; j < m; ++j) {
    Polynomial term =
        f_cleared[static_cast<std::size_t>(j)] * e_deriv[static_cast<std::size_t>(j)];
    for (int k = 0; k < m; ++k) {
      if (k == j) {
        continue;
      }
      term *= e_series[static_cast<std::size_t>(k)];
    }
    rhs += term;
  }

  const auto r_map = bucket_by_t(rhs, t_first, m);

  // D as scalar buckets; its lex-leading t-monomial drives the recursion.
  std::map<std::vector<int>, Rational> d_map;
  for (const auto& [key, poly] : bucket_by_t(d_all, t_first, m)) {
    if (!poly.is_zero()) {
      const auto& terms = poly.terms();
      if (terms.size() != 1 || !terms.front().mono.is_unit()) {
        throw std::logic_error("derive: denominator not a pure t-polynomial");
      }
      d_map.emplace(key, terms.front().coeff);
    }
  }
  const auto& [lead, lead_coeff] = *d_map.rbegin();

  // Solve the convolution sum_v D_v S_{w-v} = R_w for the S_b, walking the
  // box {0..n-1}^m in descending lex order; every S the recursion consults
  // is either already solved or lies outside the box and is zero.
  std::map<std::vector<int>, Polynomial> s_map;
  const auto in_box = [&](const std::vector<int>& b) {
    return std::all_of(b.begin(), b.end(), [&](int c) { return c >= 0 && c < n; });
  };

  std::vector<std::vector<int>> box;
  std::vector<int> cur(static_cast<std::size_t>(m), 0);
  for (;;) {
    box.push_back(cur);
    int k = m - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n - 1) {
      cur[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) {
      break;
    }
    ++cur[static_cast<std::size_t>(k)];
  }
  std::sort(box.begin(), box.end(), std::greater<>());

  const Polynomial zero = Polynomial::zero(ring);
  for (const auto& b : box) {
    std::vector<int> w(b);
    for (int k = 0; k < m; ++k) {
      w[static_cast<std::size_t>(k)] += lead[static_cast<std::size_t>(k)];
    }
    auto it = r_map.find(w);
    Polynomial acc = it != r_map.end() ? it->second : zero;
    for (const auto& [v, dv] : d_map) {
      if (v == lead) {
        continue;
      }
      std::vector<int> idx(w);
      for (int k = 0; k < m; ++k) {
        idx[static_cast<std::size_t>(k)] -= v[static_cast<std::size_t>(k)];
      }
      if (!in_box(idx)) {
        continue;
      }
      const auto sit = s_map.find(idx);
      if (sit == s_map.end()) {
        throw std::logic_error("derive: recursion order violated");
      }
      acc -= sit->second.scaled(dv);
    }
    s_map.emplace(b, acc.scaled(Rational(1) / lead_coeff));
  }

  std::vector<int> target;
  for (const int d : degrees) {
    target.push_back(d - 1);
  }
  const Polynomial& result = s_map.at(target);

  DerivedIdentity out;
  out.n = n;
  out.degrees.assign(degrees.begin(), degrees.end());
  for (const auto& term : result.terms()) {
    std::vector<int> key;
    const auto& exps = term.mono.exponents();
    for (std::size_t id = 0; id < exps.size(); ++id) {
      if (id >= t_first && exps[id] != 0) {
        throw std::logic_error("derive: residual formal parameter in result");
      }
      for (std::uint32_t c = 0; c < exps[id]; ++c) {
        key.push_back(static_cast<int>(id));
      }
    }
    if (key.size() != static_cast<std::size_t>(m)) {
      throw std::logic_error("derive: result not homogeneous of the expected degree");
    }
    std::sort(key.begin(), key.end(), std::greater<>());
    out.coefficients[std::move(key)] += term.coeff;
  }
  std::erase_if(out.coefficients, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Polynomial brute_force_oracle(int n, std::span<const int> degrees) {
  check_degrees(n, degrees, 1, degrees.size());
  const SymTables tables = build_tables(n);
  Polynomial total = Polynomial::zero(tables.full.at(0).vars());
  for (int i = 1; i <= n; ++i) {
    Polynomial prod = Polynomial::constant(total.vars(), Rational(1));
    for (const int d : degrees) {
      prod *= tables.deleted[static_cast<std::size_t>(i - 1)].at(d - 1);
    }
    total += prod;
  }
  return total;
}

Polynomial re_expand(const DerivedIdentity& d) {
  const SymTables tables = build_tables(d.n);
  Polynomial total = Polynomial::zero(tables.full.at(0).vars());
  for (const auto& [key, coeff] : d.coefficients) {
    Polynomial prod = Polynomial::constant(total.vars(), Rational(1));
    for (const int idx : key) {
      prod *= tables.full.at(idx);
    }
    total += prod.scaled(coeff);
  }
  return total;
}

Coefficients pair_coefficient_pattern(int n, int p, int q) {
  if (n < 1 || q < 2 || p < q) {
    throw std::invalid_argument("pair_coefficient_pattern: need p >= q >= 2");
  }
  Coefficients out;
  const auto add = [&](int a, int b, Rational c) {
    if (a > n || b > n) {
      return;
    }
    std::vector<int> key{std::max(a, b), std::min(a, b)};
    out[std::move(key)] += std::move(c);
  };
  add(p - 1, q - 1, Rational(n - p + 1));
  for (int r = 0; r <= q - 2; ++r) {
    add(p + q - 2 - r, r, Rational(-(p + q - 2 - 2 * r)));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IdentityReport check_triple(int n, int p, int q, int r) {
  IdentityReport report;
  report.id = "triple";
  report.params = {{"n", n}, {"p", p}, {"q", q}, {"r", r}};
  const std::vector<int> degrees{p, q, r};
  const DerivedIdentity derived = derive_identity(n, degrees);
  const Polynomial lhs = brute_force_oracle(n, degrees);
  const Polynomial rhs = re_expand(derived);
  report.pass = lhs == rhs;
  if (!report.pass) {
    report.diff = (lhs - rhs).str();
  }
  return report;
}

std::string render_coefficients(const DerivedIdentity& d) {
  if (d.coefficients.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : d.coefficients) {
    const bool negative = coeff < 0;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) {
        os << "-";
      }
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1) {
      os << to_string(mag) << "*";
    }
    bool first_factor = true;
    for (const int idx : key) {
      if (!first_factor) {
        os << "*";
      }
      first_factor = false;
      os << "e" << idx;
    }
  }
  return os.str();
}

}  // namespace symid
