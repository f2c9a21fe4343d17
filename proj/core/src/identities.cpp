#include "symid/identities.hpp"

#include "symid/derive.hpp"
#include "symid/qbinomial.hpp"
#include "symid/series.hpp"
#include "symid/symmetric.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace symid {

namespace {

void check_n(int n) {
  if (n < 1) {
    throw std::invalid_argument("identity check: n must be >= 1");
  }
}

IdentityReport poly_report(std::string id,
                           std::vector<std::pair<std::string, long long>> params,
                           const Polynomial& lhs, const Polynomial& rhs) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.params = std::move(params);
  const Polynomial diff = lhs - rhs;
  rep.pass = diff.is_zero();
  if (!rep.pass) {
    rep.diff = diff.str();
  }
  return rep;
}

IdentityReport qpoly_report(std::string id,
                            std::vector<std::pair<std::string, long long>> params,
                            const QPolynomial& lhs, const QPolynomial& rhs) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.params = std::move(params);
  const QPolynomial diff = lhs - rhs;
  rep.pass = diff.is_zero();
  if (!rep.pass) {
    rep.diff = diff.str();
  }
  return rep;
}

IdentityReport int_report(std::string id,
                          std::vector<std::pair<std::string, long long>> params,
                          const Int& lhs, const Int& rhs) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.params = std::move(params);
  rep.pass = lhs == rhs;
  if (!rep.pass) {
    rep.diff = to_string(Int(lhs - rhs));
  }
  return rep;
}

}  // namespace

IdentityReport check_eq11(int n, int cutoff) {
  check_n(n);
  if (cutoff < n + 1) {
    throw std::invalid_argument("eq11: cutoff must be >= n+1");
  }
  const Series e = gen_function(n, cutoff);
  const auto vars = e.body().vars();
  const std::size_t t_id = static_cast<std::size_t>(n);
  const auto t_power = [&](std::uint32_t k) {
    return Series(Polynomial::term(vars, Monomial::variable(t_id, k), Rational(1)),
                  {t_id}, cutoff);
  };

  Series lhs(Polynomial::zero(vars), {t_id}, cutoff);
  for (int i = 0; i < n; ++i) {
    lhs = lhs + e.derivative(static_cast<std::size_t>(i));
  }
  const Series rhs = series_mul(t_power(1), e, cutoff).scaled(Rational(n)) -
                     series_mul(t_power(2), e.derivative(t_id), cutoff);
  return poly_report("eq11", {{"n", n}, {"cutoff", cutoff}}, lhs.body(), rhs.body());
}

IdentityReport check_eq12(int n, int p) {
  check_n(n);
  if (p < 1 || p > n + 1) {
    throw std::invalid_argument("eq12: p must be in 1..n+1");
  }
  const SymTables tables = build_tables(n);
  Polynomial lhs = Polynomial::zero(tables.full.at(0).vars());
  for (int i = 0; i < n; ++i) {
    lhs += tables.deleted[static_cast<std::size_t>(i)].at(p - 1);
  }
  const Polynomial rhs = tables.full.at(p - 1).scaled(Rational(n - p + 1));
  return poly_report("eq12", {{"n", n}, {"p", p}}, lhs, rhs);
}

IdentityReport check_eq14(int n, int p) {
  check_n(n);
  if (p < 1 || p > n) {
    throw std::invalid_argument("eq14: p must be in 1..n");
  }
  const Int lhs = Int(n) * binomial(n - 1, p - 1);
  const Int rhs = Int(n - p + 1) * binomial(n, p - 1);
  return int_report("eq14", {{"n", n}, {"p", p}}, lhs, rhs);
}

IdentityReport check_eq17(int n, int p) {
  check_n(n);
  if (p < 1 || p > n) {
    throw std::invalid_argument("eq17: p must be in 1..n");
  }
  QPolynomial by_substitution, by_closed_form;
  for (int i = 1; i <= n; ++i) {
    by_substitution += deleted_elem_geometric(n, p, i);
    by_closed_form += deleted_elem_geometric_closed(n, p, i);
  }
  const QPolynomial rhs = elem_geometric(n, p - 1).scaled(Int(n - p + 1));
  auto rep = qpoly_report("eq17", {{"n", n}, {"p", p}}, by_substitution, rhs);
  if (rep.pass && !(by_closed_form == rhs)) {
    rep.pass = false;
    rep.diff = (by_closed_form - rhs).str();
    rep.note = "closed-form route disagrees";
  }
  return rep;
}

IdentityReport check_eq19(int n, int p) {
  check_n(n);
  if (p < 0 || p > n - 1) {
    throw std::invalid_argument("eq19: p must be in 0..n-1");
  }
  QPolynomial lhs;
  for (int i = p + 1; i <= n; ++i) {
    for (int u = 0; u <= p; ++u) {
      const QPolynomial factor = q_binomial(n + u - i, u) * q_binomial(i - u - 1, p - u);
      if (factor.is_zero()) {
        continue;
      }
      lhs += factor.shifted(static_cast<std::size_t>(u) * static_cast<std::size_t>(i - p));
    }
  }
  const QPolynomial rhs = q_binomial(n, p).scaled(Int(n - p));
  return qpoly_report("eq19", {{"n", n}, {"p", p}}, lhs, rhs);
}

IdentityReport check_eq24(int n, int cutoff) {
  check_n(n);
  if (cutoff < n + 1) {
    throw std::invalid_argument("eq24: cutoff must be >= n+1");
  }
  const auto vars = x_vars_plus(n, {"t1", "t2"});
  const std::size_t t1 = static_cast<std::size_t>(n);
  const std::size_t t2 = t1 + 1;
  const std::vector<std::size_t> params{t1, t2};
  const Polynomial one = Polynomial::constant(vars, Rational(1));

  // Product form of the generating function in each parameter.
  const auto product_form = [&](std::size_t t) {
    Polynomial prod = one;
    for (int i = 0; i < n; ++i) {
      prod *= one + Polynomial::variable(vars, static_cast<std::size_t>(i)) *
                        Polynomial::variable(vars, t);
    }
    return Series(prod, params, cutoff);
  };
  const auto t_term = [&](const Polynomial& p) { return Series(p, params, cutoff); };
  const auto mul = [&](const Series& a, const Series& b) {
    return series_mul(a, b, cutoff);
  };

  const Series e1 = product_form(t1);
  const Series e2 = product_form(t2);
  const Polynomial pt1 = Polynomial::variable(vars, t1);
  const Polynomial pt2 = Polynomial::variable(vars, t2);
  const Series t_diff = t_term(pt1 - pt2);
  const Series t_prod = t_term(pt1 * pt2);

  Series cross(Polynomial::zero(vars), params, cutoff);
  for (int i = 0; i < n; ++i) {
    cross = cross + mul(e1.derivative(static_cast<std::size_t>(i)),
                        e2.derivative(static_cast<std::size_t>(i)));
  }
  const Series lhs = mul(t_diff, cross);

  const Series inner = mul(t_term(pt1 * pt1), mul(e1.derivative(t1), e2)) -
                       mul(t_term(pt2 * pt2), mul(e1, e2.derivative(t2)));
  const Series rhs = mul(t_diff, mul(t_prod, mul(e1, e2))).scaled(Rational(n)) -
                     mul(t_prod, inner);
  return poly_report("eq24", {{"n", n}, {"cutoff", cutoff}}, lhs.body(), rhs.body());
}

IdentityReport check_eq25(int n, int p, int q) {
  check_n(n);
  if (q < 2 || p < q || p - 1 > n || q - 1 > n) {
    throw std::invalid_argument("eq25: need p >= q >= 2 with p-1, q-1 <= n");
  }
  const SymTables tables = build_tables(n);
  Polynomial lhs = Polynomial::zero(tables.full.at(0).vars());
  for (int i = 0; i < n; ++i) {
    const auto& del = tables.deleted[static_cast<std::size_t>(i)];
    lhs += del.at(p - 1) * del.at(q - 1);
  }
  Polynomial rhs =
      (tables.full.at(p - 1) * tables.full.at(q - 1)).scaled(Rational(n - p + 1));
  for (int r = 0; r <= q - 2; ++r) {
    rhs -= (tables.full.at(p + q - 2 - r) * tables.full.at(r))
               .scaled(Rational(p + q - 2 - 2 * r));
  }
  return poly_report("eq25", {{"n", n}, {"p", p}, {"q", q}}, lhs, rhs);
}

IdentityReport check_eq26(int n, int p, int q) {
  check_n(n);
  if (q < 2 || p < q) {
    throw std::invalid_argument("eq26: need p >= q >= 2");
  }
  const Int lhs = Int(n) * binomial(n - 1, p - 1) * binomial(n - 1, q - 1);
  Int rhs = Int(n - p + 1) * binomial(n, p - 1) * binomial(n, q - 1);
  for (int r = 0; r <= q - 2; ++r) {
    rhs -= Int(p + q - 2 - 2 * r) * binomial(n, p + q - 2 - r) * binomial(n, r);
  }
  return int_report("eq26", {{"n", n}, {"p", p}, {"q", q}}, lhs, rhs);
}

IdentityReport check_eq27(int n, int p, int q) {
  check_n(n);
  if (q < 2 || p < q) {
    throw std::invalid_argument("eq27: need p >= q >= 2");
  }
  const Int lhs =
      binomial(n - 1, p - 1) * (binomial(n, q - 1) - binomial(n - 1, q - 1));
  Int rhs(0);
  for (int r = 0; r <= q - 2; ++r) {
    rhs += binomial(n - 1, p + q - 3 - r) * binomial(n, r);
  }
  for (int r = 1; r <= q - 2; ++r) {
    rhs -= binomial(n, p + q - 2 - r) * binomial(n - 1, r - 1);
  }
  return int_report("eq27", {{"n", n}, {"p", p}, {"q", q}}, lhs, rhs);
}

IdentityReport check_eq28(int n, int q) {
  check_n(n);
  if (q < 1) {
    throw std::invalid_argument("eq28: q must be >= 1");
  }
  const Int lhs = binomial(n, q - 1) - binomial(n - 1, q - 1);
  const Int rhs = binomial(n, q - 2);
  auto rep = int_report("eq28", {{"n", n}, {"q", q}}, lhs, rhs);
  if (!rep.pass) {
    rep.note = eq28_corrected_holds(n, q)
                   ? "corrected reading C(n-1,q-2) holds"
                   : "corrected reading C(n-1,q-2) fails too";
  }
  return rep;
}

bool eq28_corrected_holds(int n, int q) {
  check_n(n);
  if (q < 1) {
    throw std::invalid_argument("eq28: q must be >= 1");
  }
  return binomial(n, q - 1) - binomial(n - 1, q - 1) == binomial(n - 1, q - 2);
}

IdentityReport check_eq29(int n, int p, int q) {
  check_n(n);
  if (q < 0 || p < q) {
    throw std::invalid_argument("eq29: need p >= q >= 0");
  }
  const Int lhs = binomial(n, p - 1) * binomial(n, q);
  Int rhs(0);
  for (int s = 0; s <= q; ++s) {
    rhs += binomial(n + 1, p + q - s) * binomial(n, s) -
           binomial(n, p + q - s) * binomial(n + 1, s);
  }
  return int_report("eq29", {{"n", n}, {"p", p}, {"q", q}}, lhs, rhs);
}

// ---- catalog ----

namespace {

const std::vector<std::string> kCatalogIds = {
    "eq11", "eq12", "eq14", "eq17", "eq19", "eq24",
    "eq25", "eq26", "eq27", "eq28", "eq29", "triple"};

struct ParamUse {
  bool p = false;
  bool q = false;
  bool r = false;
  bool cutoff = false;
};

ParamUse param_use(const std::string& id) {
  if (id == "eq11" || id == "eq24") {
    return {.cutoff = true};
  }
  if (id == "eq12" || id == "eq14" || id == "eq17" || id == "eq19") {
    return {.p = true};
  }
  if (id == "eq25" || id == "eq26" || id == "eq27" || id == "eq29") {
    return {.p = true, .q = true};
  }
  if (id == "eq28") {
    return {.q = true};
  }
  if (id == "triple") {
    return {.p = true, .q = true, .r = true};
  }
  throw std::invalid_argument("unknown identity '" + id + "'");
}

[[noreturn]] void domain_error(const Instance& inst, const std::string& why) {
  std::string msg = "identity " + inst.id + " (n=" + std::to_string(inst.n);
  if (inst.p) {
    msg += ", p=" + std::to_string(*inst.p);
  }
  if (inst.q) {
    msg += ", q=" + std::to_string(*inst.q);
  }
  if (inst.r) {
    msg += ", r=" + std::to_string(*inst.r);
  }
  if (inst.cutoff) {
    msg += ", cutoff=" + std::to_string(*inst.cutoff);
  }
  msg += "): " + why;
  throw std::invalid_argument(msg);
}

void validate(const Instance& inst) {
  const std::string& id = inst.id;
  const int n = inst.n;
  if (n < 1) {
    domain_error(inst, "n must be >= 1");
  }
  if (id == "eq11" || id == "eq24") {
    if (*inst.cutoff < n + 1) {
      domain_error(inst, "cutoff must be >= n+1");
    }
  } else if (id == "eq12") {
    if (*inst.p < 1 || *inst.p > n + 1) {
      domain_error(inst, "p must be in 1..n+1");
    }
  } else if (id == "eq14" || id == "eq17") {
    if (*inst.p < 1 || *inst.p > n) {
      domain_error(inst, "p must be in 1..n");
    }
  } else if (id == "eq19") {
    if (*inst.p < 0 || *inst.p > n - 1) {
      domain_error(inst, "p must be in 0..n-1");
    }
  } else if (id == "eq25") {
    if (*inst.q < 2 || *inst.p < *inst.q || *inst.p - 1 > n || *inst.q - 1 > n) {
      domain_error(inst, "need p >= q >= 2 with p-1, q-1 <= n");
    }
  } else if (id == "eq26" || id == "eq27") {
    if (*inst.q < 2 || *inst.p < *inst.q) {
      domain_error(inst, "need p >= q >= 2");
    }
  } else if (id == "eq28") {
    if (*inst.q < 1) {
      domain_error(inst, "q must be >= 1");
    }
  } else if (id == "eq29") {
    if (*inst.q < 0 || *inst.p < *inst.q) {
      domain_error(inst, "need p >= q >= 0");
    }
  } else if (id == "triple") {
    for (const auto& d : {inst.p, inst.q, inst.r}) {
      if (*d < 1 || *d > n) {
        domain_error(inst, "degrees must be in 1..n");
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& catalog_ids() { return kCatalogIds; }

bool is_catalog_id(const std::string& id) {
  return std::find(kCatalogIds.begin(), kCatalogIds.end(), id) != kCatalogIds.end();
}

std::vector<Instance> expand_instances(const std::string& id, IntRange n,
                                       std::optional<IntRange> p,
                                       std::optional<IntRange> q,
                                       std::optional<IntRange> r,
                                       std::optional<int> cutoff) {
  if (!is_catalog_id(id)) {
    throw std::invalid_argument("unknown identity '" + id + "'");
  }
  const ParamUse use = param_use(id);
  if (p && !use.p) {
    throw std::invalid_argument("identity " + id + " takes no parameter p");
  }
  if (q && !use.q) {
    throw std::invalid_argument("identity " + id + " takes no parameter q");
  }
  if (r && !use.r) {
    throw std::invalid_argument("identity " + id + " takes no parameter r");
  }
  if (cutoff && !use.cutoff) {
    throw std::invalid_argument("identity " + id + " takes no cutoff");
  }
  const auto check_range = [](IntRange range, const char* what) {
    if (range.first > range.second) {
      throw std::invalid_argument(std::string("empty range for ") + what);
    }
  };
  check_range(n, "n");
  if (p) {
    check_range(*p, "p");
  }
  if (q) {
    check_range(*q, "q");
  }
  if (r) {
    check_range(*r, "r");
  }

  std::vector<Instance> out;
  const bool explicit_params = p || q || r || cutoff;

  for (int nv = n.first; nv <= n.second; ++nv) {
    const auto push = [&](std::optional<int> pv, std::optional<int> qv,
                          std::optional<int> rv, std::optional<int> cv) {
      Instance inst{id, nv, pv, qv, rv, cv};
      validate(inst);
      out.push_back(std::move(inst));
    };

    if (id == "eq11" || id == "eq24") {
      push(std::nullopt, std::nullopt, std::nullopt, cutoff ? *cutoff : nv + 2);
    } else if (id == "eq12") {
      const IntRange pr = p ? *p : IntRange{1, nv + 1};
      for (int pv = pr.first; pv <= pr.second; ++pv) {
        push(pv, std::nullopt, std::nullopt, std::nullopt);
      }
    } else if (id == "eq14" || id == "eq17") {
      const IntRange pr = p ? *p : IntRange{1, nv};
      for (int pv = pr.first; pv <= pr.second; ++pv) {
        push(pv, std::nullopt, std::nullopt, std::nullopt);
      }
    } else if (id == "eq19") {
      const IntRange pr = p ? *p : IntRange{0, nv - 1};
      for (int pv = pr.first; pv <= pr.second; ++pv) {
        push(pv, std::nullopt, std::nullopt, std::nullopt);
      }
    } else if (id == "eq25" || id == "eq26" || id == "eq27") {
      if (explicit_params) {
        const IntRange pr = p ? *p : IntRange{2, nv + 1};
        const IntRange qr = q ? *q : IntRange{2, nv + 1};
        for (int pv = pr.first; pv <= pr.second; ++pv) {
          for (int qv = qr.first; qv <= qr.second; ++qv) {
            push(pv, qv, std::nullopt, std::nullopt);
          }
        }
      } else {
        for (int pv = 2; pv <= nv + 1; ++pv) {
          for (int qv = 2; qv <= pv; ++qv) {
            push(pv, qv, std::nullopt, std::nullopt);
          }
        }
      }
    } else if (id == "eq28") {
      const IntRange qr = q ? *q : IntRange{1, nv + 2};
      for (int qv = qr.first; qv <= qr.second; ++qv) {
        push(std::nullopt, qv, std::nullopt, std::nullopt);
      }
    } else if (id == "eq29") {
      if (explicit_params) {
        const IntRange pr = p ? *p : IntRange{0, 2 * nv};
        const IntRange qr = q ? *q : IntRange{0, nv};
        for (int pv = pr.first; pv <= pr.second; ++pv) {
          for (int qv = qr.first; qv <= qr.second; ++qv) {
            push(pv, qv, std::nullopt, std::nullopt);
          }
        }
      } else {
        for (int pv = 0; pv <= 2 * nv; ++pv) {
          for (int qv = 0; qv <= std::min(pv, std::min(nv, 2 * nv - pv)); ++qv) {
            push(pv, qv, std::nullopt, std::nullopt);
          }
        }
      }
    } else if (id == "triple") {
      if (explicit_params) {
        const IntRange pr = p ? *p : IntRange{1, nv};
        const IntRange qr = q ? *q : IntRange{1, nv};
        const IntRange rr = r ? *r : IntRange{1, nv};
        for (int pv = pr.first; pv <= pr.second; ++pv) {
          for (int qv = qr.first; qv <= qr.second; ++qv) {
            for (int rv = rr.first; rv <= rr.second; ++rv) {
              push(pv, qv, rv, std::nullopt);
            }
          }
        }
      } else {
        for (int pv = 1; pv <= nv; ++pv) {
          for (int qv = 1; qv <= pv; ++qv) {
            for (int rv = 1; rv <= qv; ++rv) {
              push(pv, qv, rv, std::nullopt);
            }
          }
        }
      }
    }
  }
  return out;
}

IdentityReport run_instance(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport rep;
  const std::string& id = inst.id;
  if (id == "eq11") {
    rep = check_eq11(inst.n, *inst.cutoff);
  } else if (id == "eq12") {
    rep = check_eq12(inst.n, *inst.p);
  } else if (id == "eq14") {
    rep = check_eq14(inst.n, *inst.p);
  } else if (id == "eq17") {
    rep = check_eq17(inst.n, *inst.p);
  } else if (id == "eq19") {
    rep = check_eq19(inst.n, *inst.p);
  } else if (id == "eq24") {
    rep = check_eq24(inst.n, *inst.cutoff);
  } else if (id == "eq25") {
    rep = check_eq25(inst.n, *inst.p, *inst.q);
  } else if (id == "eq26") {
    rep = check_eq26(inst.n, *inst.p, *inst.q);
  } else if (id == "eq27") {
    rep = check_eq27(inst.n, *inst.p, *inst.q);
  } else if (id == "eq28") {
    rep = check_eq28(inst.n, *inst.q);
  } else if (id == "eq29") {
    rep = check_eq29(inst.n, *inst.p, *inst.q);
  } else if (id == "triple") {
    rep = check_triple(inst.n, *inst.p, *inst.q, *inst.r);
  } else {
    throw std::invalid_argument("unknown identity '" + id + "'");
  }
  rep.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace symid
