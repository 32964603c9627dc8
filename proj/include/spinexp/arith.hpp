// Exact scalar arithmetic: arbitrary-precision integers and rationals
// (GMP) wired into Eigen dense types. Everything downstream computes over
// these scalars; no floating point, no machine-integer results.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace spinexp {

using Int = mpz_class;
using Rat = mpq_class;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1) / k!,
/// defined for any integer a and k >= 0; always an exact integer.
Int binomial(const Int& a, unsigned long k);
inline Int binomial(long a, unsigned long k) { return binomial(Int(a), k); }

/// n! as an exact integer.
Int factorial(unsigned long n);

/// 2-adic valuation of n >= 1.
unsigned long v2(const Int& n);

/// Floor division q = floor(a / b), b != 0.
Int floor_div(const Int& a, const Int& b);

/// a^k for k >= 0.
Int int_pow(const Int& a, unsigned long k);

inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Rational a/b in lowest terms with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace spinexp
