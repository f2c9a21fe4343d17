#pragma once

#include "symid/polynomial.hpp"
#include "symid/qpolynomial.hpp"

#include <span>

namespace symid {

// C(n, k) by Pascal's rule; 0 outside 0 <= k <= n. n must be >= 0.
Int binomial(int n, int k);

// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
QPolynomial q_integer(int n);

// [n]! = [n][n-1]...[1]; [0]! = 1.
QPolynomial q_factorial(int n);

// Gaussian binomial coefficient [n, k] computed by the q-Pascal recurrence
//   [n, k] = [n-1, k-1] + q^k [n-1, k],
// which keeps every intermediate value inside Z[q]. Zero outside
// 0 <= k <= n.
QPolynomial q_binomial(int n, int k);

// [n, k] as the factorial ratio [n]! / ([k]! [n-k]!), carried out by exact
// polynomial division. Cross-check route for q_binomial, not used by it.
QPolynomial q_binomial_ratio(int n, int k);

// Substitutes x_id -> q^{exponents[id]} into a polynomial with integer
// coefficients, mapping each monomial to a single power of q. Throws if a
// coefficient is not an integer or some occurring variable has no exponent.
QPolynomial eval_at_q_powers(const Polynomial& p, std::span<const int> exponents);

// e_p(1, q, ..., q^{n-1}) via the closed form q^{p(p-1)/2} [n, p].
QPolynomial elem_geometric(int n, int p);

// e_{p-1}^{(i)}(1, q, ..., q^{n-1}), computed by direct substitution into
// the symbolic deleted elementary symmetric function. This is the ground
// truth the closed form below is checked against.
QPolynomial deleted_elem_geometric(int n, int p, int i);

// Same value via the closed form
//   q^{(p-1)(p-2)/2} sum_{u=0}^{p-1} q^{u(u-(p-i-1))} [n-i, u] [i-1, p-1-u].
// The exponent u(u-(p-i-1)) is the resolved reading; it is nonnegative
// wherever the q-binomial product is nonzero.
QPolynomial deleted_elem_geometric_closed(int n, int p, int i);

}  // namespace symid
