#pragma once

#include "symid/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symid {

// Catalog of identity checks. Every check compares two exactly computed
// sides and reports the canonical difference on mismatch; nothing here is
// ever approximate.

// Truncated series relation: sum_i dE/dx_i = n t E - t^2 dE/dt, verified at
// the given total-degree cutoff in t (cutoff >= n+1).
IdentityReport check_eq11(int n, int cutoff);

// sum_i e_{p-1}^{(i)} = (n-p+1) e_{p-1}, exact polynomial equality,
// 1 <= p <= n+1.
IdentityReport check_eq12(int n, int p);

// n C(n-1,p-1) = (n-p+1) C(n,p-1), exact integers, 1 <= p <= n.
IdentityReport check_eq14(int n, int p);

// Geometric specialization of the single-sum identity: the sum of deleted
// values e_{p-1}^{(i)}(1,q,..,q^{n-1}) equals (n-p+1) e_{p-1}(1,q,..,q^{n-1})
// as polynomials in q. The left side is computed twice, by direct
// substitution and by the resolved closed form, and both must agree with
// the right side. 1 <= p <= n.
IdentityReport check_eq17(int n, int p);

// Reindexed double-sum form over the nonvanishing support:
//   sum_{i=p+1}^{n} sum_{u=0}^{p} q^{u(i-p)} [n+u-i,u] [i-u-1,p-u]
//     = (n-p) [n,p],  0 <= p <= n-1.
IdentityReport check_eq19(int n, int p);

// Two-parameter series relation for sum_i dE(t1)/dx_i dE(t2)/dx_i, with both
// sides multiplied by (t1 - t2) so everything stays polynomial; verified at
// the given total-degree cutoff (cutoff >= n+1).
IdentityReport check_eq24(int n, int cutoff);

// sum_i e_{p-1}^{(i)} e_{q-1}^{(i)} = (n-p+1) e_{p-1} e_{q-1}
//   - sum_{r=0}^{q-2} (p+q-2-2r) e_{p+q-2-r} e_r,
// exact polynomials, p >= q >= 2, p-1 <= n, q-1 <= n. Indices above n
// contribute zero terms.
IdentityReport check_eq25(int n, int p, int q);

// All-ones specialization of eq25 in exact integers, p >= q >= 2.
IdentityReport check_eq26(int n, int p, int q);

// Rearranged binomial form of eq26, p >= q >= 2:
//   C(n-1,p-1) [C(n,q-1) - C(n-1,q-1)]
//     = sum_{r=0}^{q-2} C(n-1,p+q-3-r) C(n,r)
//     - sum_{r=1}^{q-2} C(n,p+q-2-r) C(n-1,r-1).
IdentityReport check_eq27(int n, int p, int q);

// Pascal-type relation exactly as it circulates in print:
//   C(n,q-1) - C(n-1,q-1) = C(n,q-2).
// This form is wrong for q >= 3; the check reports the failure and names
// the corrected reading C(n-1,q-2) instead of patching it. q >= 1.
IdentityReport check_eq28(int n, int q);

// The corrected reading C(n,q-1) - C(n-1,q-1) = C(n-1,q-2).
bool eq28_corrected_holds(int n, int q);

// C(n,p-1) C(n,q) = sum_{s=0}^{q} [C(n+1,p+q-s) C(n,s) - C(n,p+q-s) C(n+1,s)],
// exact integers, p >= q >= 0.
IdentityReport check_eq29(int n, int p, int q);

// ---- catalog-level grid expansion ----

struct Instance {
  std::string id;
  int n = 0;
  std::optional<int> p;
  std::optional<int> q;
  std::optional<int> r;
  std::optional<int> cutoff;
};

using IntRange = std::pair<int, int>;  // inclusive

const std::vector<std::string>& catalog_ids();
bool is_catalog_id(const std::string& id);

// Expands one identity over n in [n.first, n.second] crossed with the given
// parameter ranges; omitted ranges default to the full valid domain for each
// n. Out-of-domain combinations from explicit ranges are a usage error
// (std::invalid_argument), never silently skipped. Instances come back
// sorted by (n, p, q, r, cutoff).
std::vector<Instance> expand_instances(const std::string& id, IntRange n,
                                       std::optional<IntRange> p,
                                       std::optional<IntRange> q,
                                       std::optional<IntRange> r,
                                       std::optional<int> cutoff);

// Runs one instance and stamps its elapsed time.
IdentityReport run_instance(const Instance& inst);

}  // namespace symid
