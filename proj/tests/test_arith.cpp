#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "spinexp/normal_form.hpp"

#include <random>

using namespace spinexp;

TEST_CASE("generalized binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-7, 0) == 1);
  CHECK(binomial(12, 0) == 1);
  // brute force (-3)(-4)/2 = 6
  CHECK(binomial(-3, 2) == oracle::brute_generalized_binomial(-3, 2));
  CHECK(binomial(-3, 2) == 6);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> as(-8, 8);
  std::uniform_int_distribution<int> ks(0, 6);
  for (int t = 0; t < 200; ++t) {
    long a = as(rng);
    int k = ks(rng);
    // binomial(a,k) * k! equals the falling factorial exactly
    Int lhs = binomial(a, static_cast<unsigned long>(k)) *
              factorial(static_cast<unsigned long>(k));
    Int rhs = 1;
    for (int j = 0; j < k; ++j) rhs *= Int(a - j);
    CHECK(lhs == rhs);
    CHECK(binomial(a, static_cast<unsigned long>(k)) ==
          oracle::brute_generalized_binomial(a, k));
  }
}

TEST_CASE("2-adic valuation") {
  CHECK(v2(8) == 3);
  CHECK(v2(6) == 1);
  CHECK(v2(1) == 0);
  // (i-1)! at i=4 is 3! = 6
  CHECK(v2(factorial(3)) == 1);
  CHECK_THROWS_AS(v2(0), std::invalid_argument);
}

namespace {

IntMat random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMat M(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) M(r, c) = entry(rng);
  return M;
}

bool staircase_shape(const IntMat& H) {
  int last_pivot = -1;
  bool seen_zero_row = false;
  for (Eigen::Index r = 0; r < H.rows(); ++r) {
    int pivot = -1;
    for (Eigen::Index c = 0; c < H.cols(); ++c)
      if (H(r, c) != 0) {
        pivot = static_cast<int>(c);
        break;
      }
    if (pivot < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;        // nonzero row under a zero row
    if (pivot <= last_pivot) return false;  // pivots must move right
    if (H(r, pivot) <= 0) return false;
    for (Eigen::Index rr = 0; rr < r; ++rr) {
      // entries above a pivot reduced into [0, pivot)
      if (H(rr, pivot) < 0 || H(rr, pivot) >= H(r, pivot)) return false;
    }
    last_pivot = pivot;
  }
  return true;
}

bool same_row_span(const IntMat& A, const IntMat& B) {
  IntMat Ab = hnf_basis(A), Bb = hnf_basis(B);
  if (Ab.rows() != Bb.rows()) return false;
  for (Eigen::Index r = 0; r < Ab.rows(); ++r)
    if (!solve_in_rowspan(Bb, Ab.row(r).transpose())) return false;
  for (Eigen::Index r = 0; r < Bb.rows(); ++r)
    if (!solve_in_rowspan(Ab, Bb.row(r).transpose())) return false;
  return true;
}

}  // namespace

TEST_CASE("hnf: shape, transform, idempotence") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    IntMat M = random_matrix(rng, rows, cols, 9);
    HnfResult r = hnf(M);
    CHECK(staircase_shape(r.H));
    CHECK(r.U * M == r.H);
    Int du = det(r.U);
    CHECK((du == 1 || du == -1));
    CHECK(same_row_span(M, r.H));
    // recomputing from H changes nothing
    CHECK(hnf(r.H).H == r.H);
  }
}

TEST_CASE("snf: frozen examples and minor-gcd oracle") {
  IntMat d23(2, 2);
  d23 << 2, 0, 0, 3;
  std::vector<Int> d = snf(d23);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == 6);
  CHECK(d == oracle::minors_gcd_divisors(d23));

  CHECK(snf(IntMat::Identity(3, 3)) == std::vector<Int>{1, 1, 1});

  IntMat d24(2, 2);
  d24 << 2, 0, 0, 4;
  CHECK(snf(d24) == std::vector<Int>{2, 4});

  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    IntMat M = random_matrix(rng, rows, cols, 6);
    std::vector<Int> div = snf(M);
    for (std::size_t j = 0; j + 1 < div.size(); ++j)
      CHECK(divides(div[j], div[j + 1]));
    CHECK(div == oracle::minors_gcd_divisors(M));
  }
}

TEST_CASE("snf is invariant under unimodular transforms") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    IntMat M = random_matrix(rng, 3, 3, 5);
    // random products of elementary row/column operations
    IntMat A = M;
    for (int s = 0; s < 6; ++s) {
      int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
      if (a == b) continue;
      Int f = Int(static_cast<long>(rng() % 5)) - 2;
      if (rng() % 2)
        A.row(a) += f * A.row(b);
      else
        A.col(a) += f * A.col(b);
    }
    CHECK(snf(A) == snf(M));
  }
}

TEST_CASE("left kernel") {
  IntMat M(3, 2);
  M << 1, 0, 0, 1, 1, 1;  // row3 = row1 + row2
  IntMat K = left_kernel(M);
  REQUIRE(K.rows() == 1);
  CHECK((K.row(0) * M).isZero());
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    IntMat A = random_matrix(rng, 4, 3, 4);
    IntMat K2 = left_kernel(A);
    CHECK((K2.rows() == 0 || (K2 * A).isZero()));
    CHECK(hnf_basis(A).rows() + K2.rows() == 4);
  }
}

TEST_CASE("module exponent: frozen examples") {
  IntMat A(1, 2), M(2, 2);
  A << 1, 0;
  M << 2, 0, 0, 1;
  ModuleExponent e = module_exponent(A, M);
  REQUIRE(e.finite);
  CHECK(e.value == 2);

  ModuleExponent same = module_exponent(M, M);
  REQUIRE(same.finite);
  CHECK(same.value == 1);

  IntMat A2(1, 2), M2(2, 2);
  A2 << 1, 1;
  M2 << 3, 0, 0, 3;
  ModuleExponent e2 = module_exponent(A2, M2);
  REQUIRE(e2.finite);
  CHECK(e2.value == 3);
  CHECK(e2.value == oracle::brute_module_exponent(A2, M2, 6, 8));

  // outside the rational span
  IntMat A3(1, 2), M3(1, 2);
  A3 << 0, 1;
  M3 << 1, 0;
  CHECK_FALSE(module_exponent(A3, M3).finite);
}

TEST_CASE("module exponent: minimality certificate") {
  std::mt19937_64 rng(29);
  int tested = 0;
  for (int t = 0; t < 60 && tested < 25; ++t) {
    IntMat M = random_matrix(rng, 3, 3, 4);
    if (hnf_basis(M).rows() < 3) continue;
    IntMat A = random_matrix(rng, 2, 3, 4);
    ModuleExponent e = module_exponent(A, M);
    REQUIRE(e.finite);
    ++tested;
    IntMat Mb = hnf_basis(M);
    // N * a solves for every generator
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
      IntVec target = e.value * A.row(r).transpose();
      CHECK(solve_in_rowspan(Mb, target).has_value());
    }
    // for every prime p | N some generator resists N/p
    std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
    Int rest = e.value;
    for (long p : primes)
      while (divides(Int(p), rest)) rest /= p;
    if (rest != 1) continue;  // a large prime factor; skip the certificate
    for (long p : primes) {
      if (!divides(Int(p), e.value)) continue;
      Int reduced = e.value / p;
      bool some_outside = false;
      for (Eigen::Index r = 0; r < A.rows(); ++r) {
        IntVec target = reduced * A.row(r).transpose();
        if (!solve_in_rowspan(Mb, target)) some_outside = true;
      }
      CHECK(some_outside);
    }
  }
  CHECK(tested >= 10);
}
