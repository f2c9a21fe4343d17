#pragma once

#include "symid/rational_function.hpp"

#include <vector>

namespace symid {

// Decomposition 1 / prod_j (1 + x t_j) = 1 + sum_j f_j x / (1 + x t_j)
// with each f_j a rational function of t_1..t_order only.
struct PartialFractionDecomp {
  int order = 0;
  VarTablePtr t_vars;                // t1..t_order
  std::vector<RationalFunction> f;   // f[j-1] belongs to pole 1 + x t_j
};

// Solves for the f_j by clearing denominators and running Gaussian
// elimination over the rational-function field, then verifies the defining
// relation by cross-multiplication before returning. order must be 2 or 3.
PartialFractionDecomp partial_fractions(int order);

}  // namespace symid
