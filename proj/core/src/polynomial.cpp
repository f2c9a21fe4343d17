#include "symid/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace symid {

namespace {

struct MonoDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

void require_same_vars(const Polynomial& a, const Polynomial& b) {
  if (!same_vars(a.vars(), b.vars())) {
    throw std::invalid_argument("polynomial: incompatible variable tables");
  }
}

}  // namespace

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) {
      throw std::invalid_argument("variable table: empty variable name");
    }
    if (!seen.insert(n).second) {
      throw std::invalid_argument("variable table: duplicate variable '" + n + "'");
    }
  }
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  for (std::size_t id = 0; id < names_.size(); ++id) {
    if (names_[id] == name) {
      return id;
    }
  }
  return std::nullopt;
}

VarTablePtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

VarTablePtr x_vars(int n) { return x_vars_plus(n, {}); }

VarTablePtr x_vars_plus(int n, std::vector<std::string> extra) {
  if (n < 1) {
    throw std::invalid_argument("x_vars: need at least one variable");
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) + extra.size());
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
  }
  for (auto& e : extra) {
    names.push_back(std::move(e));
  }
  return make_vars(std::move(names));
}

bool same_vars(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

Polynomial Polynomial::zero(VarTablePtr vars) { return {std::move(vars), {}}; }

Polynomial Polynomial::constant(VarTablePtr vars, Rational value) {
  return term(std::move(vars), Monomial{}, std::move(value));
}

Polynomial Polynomial::variable(VarTablePtr vars, std::size_t id) {
  if (id >= vars->size()) {
    throw std::invalid_argument("polynomial: variable id out of range");
  }
  return term(std::move(vars), Monomial::variable(id), Rational(1));
}

Polynomial Polynomial::term(VarTablePtr vars, Monomial mono, Rational coeff) {
  if (mono.width() > vars->size()) {
    throw std::invalid_argument("polynomial: monomial exceeds variable table");
  }
  if (coeff == 0) {
    return zero(std::move(vars));
  }
  std::vector<Term> t;
  t.push_back(Term{std::move(mono), std::move(coeff)});
  return {std::move(vars), std::move(t)};
}

Polynomial Polynomial::from_terms(VarTablePtr vars, std::vector<Term> terms) {
  std::map<Monomial, Rational, MonoDesc> acc;
  for (auto& t : terms) {
    if (t.mono.width() > vars->size()) {
      throw std::invalid_argument("polynomial: monomial exceeds variable table");
    }
    acc[std::move(t.mono)] += t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) {
      out.push_back(Term{m, std::move(c)});
    }
  }
  return {std::move(vars), std::move(out)};
}

std::uint64_t Polynomial::total_degree() const {
  // Terms are graded-lex descending, so the first term carries the degree.
  return terms_.empty() ? 0 : terms_.front().mono.total_degree();
}

std::uint32_t Polynomial::degree_in(std::size_t id) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) {
    d = std::max(d, t.mono.exponent(id));
  }
  return d;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_unit()) {
    return terms_.back().coeff;
  }
  return Rational(0);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_vars(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const auto cmp = terms_[i].mono <=> o.terms_[j].mono;
    if (cmp == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) {
        out.push_back(Term{terms_[i].mono, std::move(c)});
      }
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
  return {vars_, std::move(out)};
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.coeff = -t.coeff;
  }
  return {vars_, std::move(out)};
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_vars(*this, o);
  std::map<Monomial, Rational, MonoDesc> acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      acc[a.mono * b.mono] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) {
      out.push_back(Term{m, std::move(c)});
    }
  }
  return {vars_, std::move(out)};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = *this + o; }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = *this - o; }
Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) {
    return zero(vars_);
  }
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.coeff *= c;
  }
  return {vars_, std::move(out)};
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) {
      result *= base;
    }
    e >>= 1u;
    if (e > 0) {
      base *= base;
    }
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t id) const {
  if (id >= vars_->size()) {
    throw std::invalid_argument("derivative: variable id out of range");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const std::uint32_t e = t.mono.exponent(id);
    if (e == 0) {
      continue;
    }
    auto exps = t.mono.exponents();
    exps[id] = e - 1;
    out.push_back(Term{Monomial(std::move(exps)), t.coeff * Rational(e)});
  }
  // Lowering one exponent by one preserves relative graded-lex order.
  return {vars_, std::move(out)};
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  Rational total(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    const auto& exps = t.mono.exponents();
    for (std::size_t id = 0; id < exps.size(); ++id) {
      if (exps[id] == 0) {
        continue;
      }
      if (id >= values.size()) {
        throw std::invalid_argument("evaluate: no value assigned to variable '" +
                                    vars_->name(id) + "'");
      }
      v *= rational_pow(values[id], exps[id]);
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::remapped(const VarTablePtr& target) const {
  std::vector<std::optional<std::size_t>> id_map(vars_->size());
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const auto& exps = t.mono.exponents();
    std::vector<std::uint32_t> mapped;
    for (std::size_t id = 0; id < exps.size(); ++id) {
      if (exps[id] == 0) {
        continue;
      }
      if (!id_map[id]) {
        id_map[id] = target->find(vars_->name(id));
        if (!id_map[id]) {
          throw std::invalid_argument("remapped: target table lacks variable '" +
                                      vars_->name(id) + "'");
        }
      }
      const std::size_t nid = *id_map[id];
      if (mapped.size() <= nid) {
        mapped.resize(nid + 1, 0);
      }
      mapped[nid] = exps[id];
    }
    out.push_back(Term{Monomial(std::move(mapped)), t.coeff});
  }
  return from_terms(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_vars(vars_, o.vars_) && terms_ == o.terms_;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) {
    throw std::invalid_argument("divide_exact: division by zero polynomial");
  }
  Polynomial rem = a;
  Polynomial quot = Polynomial::zero(a.vars());
  const auto& lead = b.terms().front();
  while (!rem.is_zero()) {
    const auto& top = rem.terms().front();
    // Leading monomial of the divisor must divide the current leading
    // monomial; for a genuinely exact quotient it always does.
    std::vector<std::uint32_t> exps(top.mono.exponents());
    for (std::size_t id = 0; id < lead.mono.width(); ++id) {
      const std::uint32_t e = lead.mono.exponent(id);
      if (e == 0) {
        continue;
      }
      if (e > top.mono.exponent(id)) {
        throw std::invalid_argument("divide_exact: not divisible");
      }
      exps[id] -= e;  // id < exps.size() since top carries exponent >= e > 0
    }
    const Polynomial piece =
        Polynomial::term(a.vars(), Monomial(std::move(exps)), top.coeff / lead.coeff);
    quot += piece;
    rem -= piece * b;
  }
  return quot;
}

std::string Polynomial::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) {
        os << "-";
      }
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool unit_mono = t.mono.is_unit();
    if (mag != 1 || unit_mono) {
      os << to_string(mag);
      if (!unit_mono) {
        os << "*";
      }
    }
    if (!unit_mono) {
      bool first_var = true;
      const auto& exps = t.mono.exponents();
      for (std::size_t id = 0; id < exps.size(); ++id) {
        if (exps[id] == 0) {
          continue;
        }
        if (!first_var) {
          os << "*";
        }
        first_var = false;
        os << vars_->name(id);
        if (exps[id] > 1) {
          os << "^" << exps[id];
        }
      }
    }
  }
  return os.str();
}

}  // namespace symid
