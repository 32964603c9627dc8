// Integer-lattice normal forms over exact big integers: row Hermite form
// with transformation matrix, Smith elementary divisors, kernels, span
// membership and the quotient-exponent computation used by the tau oracle.
#pragma once

#include "spinexp/arith.hpp"

#include <optional>
#include <vector>

namespace spinexp {

struct HnfResult {
  IntMat H;  // row Hermite normal form, same shape as the input
  IntMat U;  // unimodular, H = U * M
};

/// Row Hermite normal form. Pivots are positive, entries below a pivot are
/// zero, entries above are reduced into [0, pivot). Zero rows sink to the
/// bottom. Intermediate entries are kept reduced modulo the current pivot.
HnfResult hnf(const IntMat& M);

/// Nonzero rows of hnf(M).H — a canonical basis of the row span.
IntMat hnf_basis(const IntMat& M);

/// Nonzero elementary divisors d_1 | d_2 | ... | d_r, all positive.
std::vector<Int> snf(const IntMat& M);

/// Basis (as rows) of { x : x * M = 0 } over Z.
IntMat left_kernel(const IntMat& M);

/// Exact determinant (fraction-free Bareiss).
Int det(const IntMat& M);

/// Solve x * B = target over Z for B a row-HNF basis (no zero rows).
/// Returns std::nullopt when target is outside the Z-span.
std::optional<IntVec> solve_in_rowspan(const IntMat& B, const IntVec& target);

/// Same over Q: nullopt when target is outside the Q-span.
std::optional<RatVec> solve_in_rowspan_q(const IntMat& B, const IntVec& target);

/// Incrementally maintained row span of integer vectors, stored in HNF.
class LatticeSpan {
 public:
  explicit LatticeSpan(Eigen::Index dim) : dim_(dim), basis_(0, dim) {}

  /// Adds v to the span. Returns true when the span grew.
  bool insert(const IntVec& v);

  bool contains(const IntVec& v) const;

  /// True when every row of other is contained in this span.
  bool contains_all(const IntMat& other) const;

  const IntMat& basis() const { return basis_; }
  Eigen::Index rank() const { return basis_.rows(); }
  Eigen::Index dim() const { return dim_; }

  bool operator==(const LatticeSpan& other) const {
    return basis_ == other.basis_;
  }

 private:
  Eigen::Index dim_;
  IntMat basis_;  // HNF rows, no zero rows
};

struct ModuleExponent {
  bool finite = false;
  Int value;                  // minimal N >= 1, valid when finite
  std::vector<Int> divisors;  // elementary divisors of the quotient
};

/// Minimal N >= 1 with N * a in span_Z(rows of M) for every row a of A,
/// computed from the Smith divisors of the stacked system. Not finite when
/// some row of A lies outside the Q-span of M.
ModuleExponent module_exponent(const IntMat& A, const IntMat& M);

}  // namespace spinexp
