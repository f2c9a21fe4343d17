#pragma once

#include "symid/monomial.hpp"
#include "symid/rational.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symid {

// Ordered list of variable names defining one polynomial ring. Tables are
// immutable and shared; two polynomials interoperate only when their tables
// agree by value.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  bool operator==(const VarTable& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);
VarTablePtr x_vars(int n);                                   // x1..xn
VarTablePtr x_vars_plus(int n, std::vector<std::string> extra);

bool same_vars(const VarTablePtr& a, const VarTablePtr& b);

// Sparse multivariate polynomial with exact rational coefficients.
//
// Invariants: terms are sorted in descending graded-lex order, no stored
// coefficient is zero, and all terms index variables of the attached table.
// Values are immutable after construction and safe to share across threads.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;

    bool operator==(const Term& o) const = default;
  };

  static Polynomial zero(VarTablePtr vars);
  static Polynomial constant(VarTablePtr vars, Rational value);
  static Polynomial variable(VarTablePtr vars, std::size_t id);
  static Polynomial term(VarTablePtr vars, Monomial mono, Rational coeff);
  static Polynomial from_terms(VarTablePtr vars, std::vector<Term> terms);

  const VarTablePtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t total_degree() const;            // 0 for the zero polynomial
  std::uint32_t degree_in(std::size_t id) const;
  Rational constant_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t id) const;

  // Exact evaluation; `values[id]` assigns variable id. Throws if some
  // variable occurring in the polynomial has no assigned value.
  Rational evaluate(std::span<const Rational> values) const;

  // Transports the polynomial into a ring whose table contains (by name)
  // every variable used here.
  Polynomial remapped(const VarTablePtr& target) const;

  bool operator==(const Polynomial& o) const;

  // Canonical rendering: descending graded-lex term order, "*" products,
  // "^" powers, e.g. "x1^2 + 2*x1*x2 - 1/2".
  std::string str() const;

 private:
  Polynomial(VarTablePtr vars, std::vector<Term> terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {}

  VarTablePtr vars_;
  std::vector<Term> terms_;  // descending graded-lex, coefficients nonzero
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Exact quotient a / b, reducing by graded-lex leading terms. Throws
// std::invalid_argument when b is zero or does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace symid
