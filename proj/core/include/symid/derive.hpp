#pragma once

#include "symid/polynomial.hpp"
#include "symid/rational.hpp"
#include "symid/report.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace symid {

// An identity sum_{i=1}^{n} prod_k e^{(i)}_{d_k - 1} = sum_B c_B prod e_b
// expressed as a coefficient list. Keys are the e-index multisets, sorted
// descending (index 0 stands for the e_0 = 1 factor, kept explicit so every
// key has exactly |degrees| entries); coefficients are exact rationals and
// never zero. Indices above n never appear: such products are identically
// zero and carry no information.
struct DerivedIdentity {
  int n = 0;
  std::vector<int> degrees;
  std::map<std::vector<int>, Rational, std::greater<std::vector<int>>> coefficients;
};

// Mechanically derives the identity for 2 or 3 degrees, each in 1..n.
//
// The derivation never expands anything in the x variables. It works in the
// ring Q[E_0..E_n][t_1..t_m] where the E_r are opaque symbols standing for
// the elementary symmetric functions:
//   1. partial_fractions(m) supplies f_j with 1/prod(1+x t_j)
//      = 1 + sum_j f_j x/(1+x t_j), which turns the generating relation into
//        sum_i prod_k E^{(i)}(t_k) = n prod_k E(t_k)
//                                    + sum_j f_j E'(t_j) prod_{k!=j} E(t_k).
//   2. Multiplying through by D = prod_j den(f_j) clears every denominator;
//      the right side becomes an explicit polynomial R in the E symbols.
//   3. The unknown coefficients S_b of the left side (b the t-exponent
//      tuple) satisfy the convolution sum_v D_v S_{w-v} = R_w. Since S_b
//      vanishes whenever some b_k >= n, solving the equations in descending
//      lexicographic order of b recovers every S_b, in particular the target
//      tuple b = degrees - 1.
DerivedIdentity derive_identity(int n, std::span<const int> degrees);

// Direct symbolic expansion of sum_i prod_k e^{(i)}_{d_k - 1} over the x
// variables. Ground truth for everything derive_identity produces. Accepts
// any number of degrees >= 1.
Polynomial brute_force_oracle(int n, std::span<const int> degrees);

// Expands a coefficient list back into the ring x1..xn.
Polynomial re_expand(const DerivedIdentity& d);

// Closed-form coefficient list of the two-degree identity, p >= q >= 2:
//   {e_{p-1} e_{q-1}: n-p+1} merged with {e_{p+q-2-r} e_r: -(p+q-2-2r)}
// for r = 0..q-2, products with an index above n dropped.
std::map<std::vector<int>, Rational, std::greater<std::vector<int>>>
pair_coefficient_pattern(int n, int p, int q);

// Derives the three-degree identity and checks it against the brute-force
// oracle; degrees p, q, r each in 1..n.
IdentityReport check_triple(int n, int p, int q, int r);

std::string render_coefficients(const DerivedIdentity& d);

}  // namespace symid
