// Exact verification of the orbit-sum identities: vanishing sums, the
// orbit decomposition into even-multiplicity sums, the degree-4/6
// identities, the D-type top product, the coefficient system expressing
// elementary symmetric invariants as phi-images, and Newton certificates.
#pragma once

#include "spinexp/groupring.hpp"
#include "spinexp/report.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinexp {

using MTuple = std::vector<int>;

/// sum over lambda in W(omega_k) of lambda(m_1) ... lambda(m_p),
/// expanded exactly in e-coordinates.
PolyQ orbit_moment_sum(const GroupType& g, int k, const MTuple& M);

/// Sum over q-subsets of {e_1..e_n} and over slot assignments in which
/// every chosen direction occurs a positive even number of times, of the
/// product lambda_{j_t}(m_t); zero when p < 2q. p must be even.
PolyQ even_multiplicity_sum(const GroupType& g, int p, int q, const MTuple& M);

/// Linear combination sum_k coeffs[k] * phi^(degree)(rho(omega_k)).
PolyQ phi_rho_combination(const GroupType& g, int degree,
                          const std::map<int, Int>& coeffs);

/// phi^(degree)(rho(omega_k)) with an internal cache.
PolyQ phi_rho_cached(const GroupType& g, int degree, int k);

/// Randomized vanishing / equality checks; the clause is selected by the
/// (family, k, p) regime. M-tuples have entries in 0..3.
VerificationReport verify_vanishing(const GroupType& g, int k, int p,
                                    int trials, std::uint64_t seed);

/// Orbit decomposition for one explicit M-tuple (p even).
VerificationReport verify_orbit_decomposition(const GroupType& g, int k,
                                              int p, const MTuple& M);

/// Same, aggregated over `trials` random M-tuples.
VerificationReport verify_orbit_decomposition_randomized(const GroupType& g,
                                                         int k, int p,
                                                         int trials,
                                                         std::uint64_t seed);

/// phi^(4)(rho(omega_2)) - 2(n-1) phi^(4)(rho(omega_1)) equals the
/// elementary symmetric polynomial of degree 2 in squares.
VerificationReport verify_degree4_identity(const GroupType& g);

/// Degree-6 analogue with omega_3, omega_2, omega_1.
VerificationReport verify_degree6_identity(const GroupType& g);

/// Family D: sum_{W(omega_n)} lambda^n - sum_{W(omega_{n-1})} lambda^n
/// equals n! e_1...e_n.
VerificationReport verify_top_product(const GroupType& g);

/// Family D: equality of the two spin orbit sums for random M with
/// 1 <= p <= n-1.
VerificationReport verify_top_product_equal(const GroupType& g, int trials,
                                            std::uint64_t seed);

/// Family D: q'_n = phi^(n)(rho(omega_n)) - phi^(n)(rho(omega_{n-1})).
VerificationReport verify_q_prime_image(int n);

/// Integer coefficients a_1..a_{i-1} of the triangular system
///   (sum_{j=k}^{i-2} 2^{j+1} C(n-1-k, j-k) a_{j+1}) + 2^i C(n-1-k, i-1-k) = 0
/// for 0 <= k <= i-2, together with their verified assignment to the
/// orbit sums phi^(2i)(rho(omega_k)). Both candidate assignments are
/// tried symbolically; exactly one must make the identity hold.
struct CombinationCoeffs {
  GroupType group;
  int i = 0;
  std::vector<Int> a;              // solved a_1..a_{i-1}
  std::map<int, Int> coeff_on_omega;  // k -> coefficient on rho(omega_k)
  std::string pairing;             // which candidate assignment verified
};

CombinationCoeffs solve_combination_coeffs(const GroupType& g, int i);

/// Full check that the solved combination equals p_elem(n, i).
VerificationReport verify_elementary_combination(const GroupType& g, int i);

/// Constructive expression of q_{2i} as an explicit combination of
/// polynomial multiples of verified phi-image combinations, via the
/// classical Newton identity. Replays to exact polynomial equality.
struct NewtonCertificate {
  struct Term {
    Int scalar;
    PolyQ multiplier;  // e-basis, degree 2(i - combo)
    int combo = 0;     // references the degree-2*combo image combination
  };
  GroupType group;
  int i = 0;
  std::vector<Term> terms;
  std::map<int, std::map<int, Int>> combos;  // j -> coeffs on rho(omega_k)
};

NewtonCertificate newton_certificate(const GroupType& g, int i);
VerificationReport replay(const NewtonCertificate& cert);

/// Suite runner ------------------------------------------------------------

struct SuiteConfig {
  std::optional<Family> family;
  std::optional<int> rank;
  std::vector<std::string> id_prefixes;  // empty = everything
  std::uint64_t seed = 20120827;
  int trials = 5;
  int threads = 0;  // 0 = from EXPONENT_THREADS, else hardware
};

struct SuiteCase {
  std::string id;
  std::function<VerificationReport()> run;
};

std::vector<SuiteCase> suite_catalog(const SuiteConfig& config);
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// Stable per-case seed derived from the base seed and the case id.
std::uint64_t derive_seed(std::uint64_t base, const std::string& id);

}  // namespace spinexp
