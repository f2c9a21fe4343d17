#pragma once

#include "symid/polynomial.hpp"
#include "symid/series.hpp"

#include <span>
#include <vector>

namespace symid {

// Elementary symmetric function of degree r in the listed variables of an
// arbitrary ring, built by the prefix recurrence
//   e_r(v_1..v_k) = e_r(v_1..v_{k-1}) + v_k * e_{r-1}(v_1..v_{k-1}).
// Returns 1 for r = 0 and the zero polynomial for r > #ids.
Polynomial elem_sym_of(const VarTablePtr& vars, std::span<const std::size_t> ids, int r);

// e_r(x_1..x_n) in the ring x1..xn. r > n gives the zero polynomial.
Polynomial elem_sym(int n, int r);

// e_r of the n-1 variables with x_i omitted, in the full ring x1..xn.
Polynomial elem_sym_deleted(int n, int r, int i);

// p_r = sum_i x_i^r, r >= 1.
Polynomial power_sum(int n, int r);

// Truncated generating function sum_r e_r(x) t^r in the ring x1..xn,t; the
// formal parameter t has variable id n.
Series gen_function(int n, int cutoff);

// All e_0..e_n of the full variable set. at(r) returns the zero polynomial
// outside 0..n, so identity sums can run over uniform index ranges.
class ElemSymTable {
 public:
  ElemSymTable(int n, std::vector<Polynomial> entries)
      : n_(n), entries_(std::move(entries)), zero_(Polynomial::zero(entries_.at(0).vars())) {}

  int n() const { return n_; }
  const Polynomial& at(int r) const {
    return (r < 0 || r > n_) ? zero_ : entries_[static_cast<std::size_t>(r)];
  }

 private:
  int n_;
  std::vector<Polynomial> entries_;  // e_0..e_n
  Polynomial zero_;
};

// e_0^{(i)}..e_{n-1}^{(i)} for one deleted index i, in the full ring.
class DeletedElemSymTable {
 public:
  DeletedElemSymTable(int n, int deleted_index, std::vector<Polynomial> entries)
      : n_(n),
        deleted_index_(deleted_index),
        entries_(std::move(entries)),
        zero_(Polynomial::zero(entries_.at(0).vars())) {}

  int n() const { return n_; }
  int deleted_index() const { return deleted_index_; }  // 1-based
  const Polynomial& at(int r) const {
    return (r < 0 || r >= n_) ? zero_ : entries_[static_cast<std::size_t>(r)];
  }

 private:
  int n_;
  int deleted_index_;
  std::vector<Polynomial> entries_;  // e_0..e_{n-1}
  Polynomial zero_;
};

struct SymTables {
  ElemSymTable full;
  std::vector<DeletedElemSymTable> deleted;  // index i-1 holds table for x_i
};

SymTables build_tables(int n);

}  // namespace symid
