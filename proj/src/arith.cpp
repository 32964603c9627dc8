#include "spinexp/arith.hpp"

namespace spinexp {

Int binomial(const Int& a, unsigned long k) {
  // Falling factorial a(a-1)...(a-k+1) over k!; the division is exact.
  Int num = 1;
  Int term = a;
  for (unsigned long j = 0; j < k; ++j) {
    num *= term;
    term -= 1;
  }
  Int den = factorial(k);
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

unsigned long v2(const Int& n) {
  if (n < 1) throw std::invalid_argument("v2: argument must be >= 1");
  return mpz_scan1(n.get_mpz_t(), 0);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int int_pow(const Int& a, unsigned long k) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace spinexp
