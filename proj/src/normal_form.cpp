#include "spinexp/normal_form.hpp"

#include <algorithm>

namespace spinexp {

namespace {

void swap_rows(IntMat& M, Eigen::Index a, Eigen::Index b) {
  if (a != b) M.row(a).swap(M.row(b));
}

// Index of the row in [from, rows) with the smallest nonzero |entry| in
// column c, or -1 when the column is zero there.
Eigen::Index min_abs_row(const IntMat& M, Eigen::Index from, Eigen::Index c) {
  Eigen::Index best = -1;
  for (Eigen::Index r = from; r < M.rows(); ++r) {
    if (M(r, c) == 0) continue;
    if (best < 0 || mpz_cmpabs(M(r, c).get_mpz_t(), M(best, c).get_mpz_t()) < 0)
      best = r;
  }
  return best;
}

}  // namespace

HnfResult hnf(const IntMat& M) {
  const Eigen::Index rows = M.rows(), cols = M.cols();
  HnfResult res;
  res.H = M;
  res.U = IntMat::Identity(rows, rows);
  IntMat& H = res.H;
  IntMat& U = res.U;

  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Euclid on the column until a single nonzero entry remains at row r.
    for (;;) {
      Eigen::Index p = min_abs_row(H, r, c);
      if (p < 0) break;
      swap_rows(H, r, p);
      swap_rows(U, r, p);
      bool cleared = true;
      for (Eigen::Index j = r + 1; j < rows; ++j) {
        if (H(j, c) == 0) continue;
        Int q = floor_div(H(j, c), H(r, c));
        if (q != 0) {
          H.row(j) -= q * H.row(r);
          U.row(j) -= q * U.row(r);
        }
        if (H(j, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.row(r) = -H.row(r);
      U.row(r) = -U.row(r);
    }
    for (Eigen::Index j = 0; j < r; ++j) {
      Int q = floor_div(H(j, c), H(r, c));
      if (q != 0) {
        H.row(j) -= q * H.row(r);
        U.row(j) -= q * U.row(r);
      }
    }
    ++r;
  }
  return res;
}

IntMat hnf_basis(const IntMat& M) {
  IntMat H = hnf(M).H;
  Eigen::Index nz = 0;
  for (Eigen::Index r = 0; r < H.rows(); ++r)
    if (!H.row(r).isZero()) ++nz;
  return H.topRows(nz);
}

std::vector<Int> snf(const IntMat& M) {
  IntMat A = M;
  const Eigen::Index rows = A.rows(), cols = A.cols();
  const Eigen::Index rmax = std::min(rows, cols);
  std::vector<Int> divisors;

  for (Eigen::Index t = 0; t < rmax; ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j) {
        if (A(i, j) == 0) continue;
        if (pi < 0 || mpz_cmpabs(A(i, j).get_mpz_t(), A(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(A, t, pi);
    if (pj != t) A.col(t).swap(A.col(pj));

    for (;;) {
      // Clear column t below the pivot.
      bool col_clear = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        while (A(i, t) != 0) {
          Int q = floor_div(A(i, t), A(t, t));
          if (q != 0) A.row(i) -= q * A.row(t);
          if (A(i, t) != 0) {
            swap_rows(A, t, i);
            col_clear = false;
          }
        }
      }
      // Clear row t right of the pivot.
      bool row_clear = true;
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        while (A(t, j) != 0) {
          Int q = floor_div(A(t, j), A(t, t));
          if (q != 0) A.col(j) -= q * A.col(t);
          if (A(t, j) != 0) {
            A.col(t).swap(A.col(j));
            row_clear = false;
          }
        }
      }
      if (!(col_clear && row_clear)) continue;

      // Pivot must divide the whole trailing block for the divisor chain.
      bool fixed = true;
      for (Eigen::Index i = t + 1; i < rows && fixed; ++i)
        for (Eigen::Index j = t + 1; j < cols && fixed; ++j)
          if (!divides(A(t, t), A(i, j))) {
            A.row(t) += A.row(i);
            fixed = false;
          }
      if (fixed) break;
    }
  }

  for (Eigen::Index t = 0; t < rmax; ++t) {
    if (A(t, t) == 0) break;
    divisors.push_back(abs(A(t, t)));
  }
  return divisors;
}

IntMat left_kernel(const IntMat& M) {
  HnfResult r = hnf(M);
  std::vector<Eigen::Index> zero_rows;
  for (Eigen::Index i = 0; i < r.H.rows(); ++i)
    if (r.H.row(i).isZero()) zero_rows.push_back(i);
  IntMat K(static_cast<Eigen::Index>(zero_rows.size()), M.rows());
  for (Eigen::Index i = 0; i < K.rows(); ++i) K.row(i) = r.U.row(zero_rows[i]);
  return K;
}

Int det(const IntMat& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("det: square only");
  const Eigen::Index n = M.rows();
  if (n == 0) return 1;
  IntMat A = M;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      swap_rows(A, k, p);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int num = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(A(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = A(k, k);
  }
  Int d = A(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

namespace {

Eigen::Index pivot_col(const IntMat& B, Eigen::Index row) {
  for (Eigen::Index c = 0; c < B.cols(); ++c)
    if (B(row, c) != 0) return c;
  return -1;
}

}  // namespace

std::optional<IntVec> solve_in_rowspan(const IntMat& B, const IntVec& target) {
  IntVec res = target;
  IntVec x = IntVec::Zero(B.rows());
  for (Eigen::Index r = 0; r < B.rows(); ++r) {
    Eigen::Index p = pivot_col(B, r);
    if (p < 0) return std::nullopt;  // zero row in a basis is malformed
    if (res(p) == 0) continue;
    if (!divides(B(r, p), res(p))) return std::nullopt;
    Int q;
    mpz_divexact(q.get_mpz_t(), res(p).get_mpz_t(), B(r, p).get_mpz_t());
    x(r) = q;
    res -= q * B.row(r).transpose();
  }
  if (!res.isZero()) return std::nullopt;
  return x;
}

std::optional<RatVec> solve_in_rowspan_q(const IntMat& B,
                                         const IntVec& target) {
  RatVec res(target.size());
  for (Eigen::Index i = 0; i < target.size(); ++i) res(i) = Rat(target(i));
  RatVec x = RatVec::Zero(B.rows());
  for (Eigen::Index r = 0; r < B.rows(); ++r) {
    Eigen::Index p = pivot_col(B, r);
    if (p < 0) return std::nullopt;
    if (res(p) == 0) continue;
    Rat q = res(p) / Rat(B(r, p));
    x(r) = q;
    for (Eigen::Index c = 0; c < res.size(); ++c) res(c) -= q * Rat(B(r, c));
  }
  for (Eigen::Index c = 0; c < res.size(); ++c)
    if (res(c) != 0) return std::nullopt;
  return x;
}

bool LatticeSpan::insert(const IntVec& v) {
  if (v.size() != dim_) throw std::invalid_argument("LatticeSpan: bad size");
  if (v.isZero()) return false;
  if (contains(v)) return false;
  IntMat stacked(basis_.rows() + 1, dim_);
  stacked.topRows(basis_.rows()) = basis_;
  stacked.row(basis_.rows()) = v.transpose();
  basis_ = hnf_basis(stacked);
  return true;
}

bool LatticeSpan::contains(const IntVec& v) const {
  if (v.isZero()) return true;
  if (basis_.rows() == 0) return false;
  return solve_in_rowspan(basis_, v).has_value();
}

bool LatticeSpan::contains_all(const IntMat& other) const {
  for (Eigen::Index r = 0; r < other.rows(); ++r)
    if (!contains(other.row(r).transpose())) return false;
  return true;
}

ModuleExponent module_exponent(const IntMat& A, const IntMat& M) {
  if (A.cols() != M.cols() && A.rows() > 0 && M.rows() > 0)
    throw std::invalid_argument("module_exponent: dimension mismatch");
  const Eigen::Index dim = A.rows() > 0 ? A.cols() : M.cols();

  IntMat stacked = IntMat::Zero(A.rows() + M.rows(), dim);
  if (A.rows() > 0) stacked.topRows(A.rows()) = A;
  if (M.rows() > 0) stacked.bottomRows(M.rows()) = M;
  IntMat B = hnf_basis(stacked);

  ModuleExponent out;
  if (B.rows() == 0) {  // both modules are zero
    out.finite = true;
    out.value = 1;
    return out;
  }

  IntMat Mb = hnf_basis(M);
  if (Mb.rows() < B.rows()) return out;  // some generator escapes the Q-span

  // Coordinates of span(M) inside the combined basis.
  IntMat C(Mb.rows(), B.rows());
  for (Eigen::Index r = 0; r < Mb.rows(); ++r) {
    std::optional<IntVec> x = solve_in_rowspan(B, Mb.row(r).transpose());
    if (!x) throw std::logic_error("module_exponent: basis inconsistency");
    C.row(r) = x->transpose();
  }

  std::vector<Int> d = snf(C);
  if (static_cast<Eigen::Index>(d.size()) < B.rows()) return out;
  out.finite = true;
  out.divisors = d;
  out.value = d.back();
  return out;
}

}  // namespace spinexp
