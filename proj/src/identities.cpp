#include "spinexp/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>

namespace spinexp {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string mtuple_string(const MTuple& M) {
  std::string s = "(";
  for (std::size_t t = 0; t < M.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(M[t]);
  }
  return s + ")";
}

MTuple random_mtuple(std::mt19937_64& rng, int p) {
  std::uniform_int_distribution<int> entry(0, 3);
  MTuple M(static_cast<std::size_t>(p));
  for (int t = 0; t < p; ++t) M[static_cast<std::size_t>(t)] = entry(rng);
  return M;
}

PolyQ zero_e(const GroupType& g) { return PolyQ::zero(VarBasis::E, g.rank); }

VerificationReport finish(VerificationReport r, PolyQ witness,
                          const Stopwatch& sw) {
  r.pass = witness.is_zero();
  r.witness = std::move(witness);
  r.millis = sw.millis();
  return r;
}

}  // namespace

PolyQ orbit_moment_sum(const GroupType& g, int k, const MTuple& M) {
  if (M.empty()) throw std::invalid_argument("orbit_moment_sum: empty tuple");
  Orbit orb = orbit(g, fundamental_weight(g, k));
  PolyAccumulator<Rat> acc(VarBasis::E, g.rank);
  for (const Eigen::VectorXi& v : orb.elements) {
    // Each distinct m is expanded once per orbit element.
    std::map<int, PolyQ> moments;
    for (int m : M)
      if (!moments.count(m)) moments.emplace(m, lambda_moment(g, v, m));
    PolyQ prod = PolyQ::constant(VarBasis::E, g.rank, Rat(1));
    for (int m : M) prod = prod * moments.at(m);
    acc.add(prod);
  }
  return acc.take();
}

PolyQ even_multiplicity_sum(const GroupType& g, int p, int q,
                            const MTuple& M) {
  if (p % 2 != 0)
    throw std::invalid_argument("even_multiplicity_sum: p must be even");
  if (q < 2) throw std::invalid_argument("even_multiplicity_sum: q >= 2");
  if (static_cast<int>(M.size()) != p)
    throw std::invalid_argument("even_multiplicity_sum: |M| != p");
  const int n = g.rank;
  if (p < 2 * q) return zero_e(g);

  std::vector<Weight> basis = standard_basis_weights(g);
  // lambda_{e_j}(m) for every direction and every distinct m.
  std::map<std::pair<int, int>, PolyQ> moments;
  auto moment = [&](int j, int m) -> const PolyQ& {
    auto key = std::make_pair(j, m);
    auto it = moments.find(key);
    if (it == moments.end())
      it = moments
               .emplace(key, lambda_moment(
                                 g, basis[static_cast<std::size_t>(j)].omega,
                                 m))
               .first;
    return it->second;
  };

  PolyAccumulator<Rat> acc(VarBasis::E, g.rank);
  std::vector<int> subset(static_cast<std::size_t>(q));
  for (int t = 0; t < q; ++t) subset[static_cast<std::size_t>(t)] = t;

  std::vector<int> assign(static_cast<std::size_t>(p));
  std::vector<int> used(static_cast<std::size_t>(q));
  auto enumerate_assignments = [&](auto&& self, int slot) -> void {
    if (slot == p) {
      for (int u : used)
        if (u == 0 || u % 2 != 0) return;
      PolyQ prod = PolyQ::constant(VarBasis::E, g.rank, Rat(1));
      for (int t = 0; t < p; ++t)
        prod = prod * moment(subset[static_cast<std::size_t>(
                                 assign[static_cast<std::size_t>(t)])],
                             M[static_cast<std::size_t>(t)]);
      acc.add(prod);
      return;
    }
    for (int c = 0; c < q; ++c) {
      assign[static_cast<std::size_t>(slot)] = c;
      ++used[static_cast<std::size_t>(c)];
      // Remaining slots must be able to bring every count to even >= 2.
      int deficit = 0;
      for (int u : used) deficit += (u == 0) ? 2 : (u % 2);
      if (p - slot - 1 >= deficit) self(self, slot + 1);
      --used[static_cast<std::size_t>(c)];
    }
  };

  for (;;) {
    std::fill(used.begin(), used.end(), 0);
    enumerate_assignments(enumerate_assignments, 0);
    int t = q - 1;
    while (t >= 0 && subset[static_cast<std::size_t>(t)] == n - q + t) --t;
    if (t < 0) break;
    ++subset[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < q; ++u)
      subset[static_cast<std::size_t>(u)] =
          subset[static_cast<std::size_t>(u - 1)] + 1;
  }
  return acc.take();
}

namespace {

std::mutex phi_rho_mutex;
std::map<std::tuple<Family, int, int, int>, PolyQ> phi_rho_store;

}  // namespace

PolyQ phi_rho_cached(const GroupType& g, int degree, int k) {
  std::tuple<Family, int, int, int> key{g.family, g.rank, degree, k};
  {
    std::lock_guard<std::mutex> lock(phi_rho_mutex);
    auto it = phi_rho_store.find(key);
    if (it != phi_rho_store.end()) return it->second;
  }
  PolyQ value = phi(g, degree, rho(g, fundamental_weight(g, k)));
  std::lock_guard<std::mutex> lock(phi_rho_mutex);
  return phi_rho_store.emplace(key, std::move(value)).first->second;
}

PolyQ phi_rho_combination(const GroupType& g, int degree,
                          const std::map<int, Int>& coeffs) {
  PolyAccumulator<Rat> acc(VarBasis::E, g.rank);
  for (const auto& [k, c] : coeffs) {
    if (c == 0) continue;
    acc.add(phi_rho_cached(g, degree, k), Rat(c));
  }
  return acc.take();
}

VerificationReport verify_vanishing(const GroupType& g, int k, int p,
                                    int trials, std::uint64_t seed) {
  Stopwatch sw;
  const int n = g.rank;
  const int small_max = g.family == Family::B ? n - 1 : n - 2;
  const bool small = k >= 1 && k <= small_max;
  const bool spin = g.family == Family::D && (k == n - 1 || k == n);

  std::string clause;
  if (small && p % 2 == 1) {
    clause = "odd-sum-vanishes";
  } else if (spin && p % 2 == 0 && n % 2 == 1) {
    clause = "spin-sums-equal";
  } else if (spin && p % 2 == 1 && p < n) {
    clause = "spin-sums-vanish";
  } else {
    throw std::invalid_argument(
        "verify_vanishing: no clause covers this (family, k, p)");
  }

  VerificationReport r;
  r.id = "vanishing:" + g.name() + ":k=" + std::to_string(k) +
         ":p=" + std::to_string(p);
  r.params = {{"family", g.name()},
              {"k", std::to_string(k)},
              {"p", std::to_string(p)},
              {"clause", clause},
              {"trials", std::to_string(trials)}};
  r.seed = seed;

  std::mt19937_64 rng(seed);
  PolyQ witness = zero_e(g);
  for (int t = 0; t < trials && witness.is_zero(); ++t) {
    MTuple M = random_mtuple(rng, p);
    if (clause == "odd-sum-vanishes") {
      witness = orbit_moment_sum(g, k, M);
    } else if (clause == "spin-sums-equal") {
      witness = orbit_moment_sum(g, n, M) - orbit_moment_sum(g, n - 1, M);
    } else {
      PolyQ top = orbit_moment_sum(g, n, M);
      PolyQ sub = orbit_moment_sum(g, n - 1, M);
      witness = top - sub;
      if (witness.is_zero()) witness = top;  // both sums must vanish
    }
    if (!witness.is_zero()) r.params["failing_m"] = mtuple_string(M);
  }
  return finish(std::move(r), std::move(witness), sw);
}

VerificationReport verify_orbit_decomposition(const GroupType& g, int k,
                                              int p, const MTuple& M) {
  Stopwatch sw;
  const int n = g.rank;
  const int small_max = g.family == Family::B ? n - 1 : n - 2;
  if (k < 1 || k > small_max)
    throw std::invalid_argument("verify_orbit_decomposition: k out of range");
  if (p % 2 != 0 || static_cast<int>(M.size()) != p)
    throw std::invalid_argument("verify_orbit_decomposition: p even, |M|=p");

  VerificationReport r;
  r.id = "orbit-decomposition:" + g.name() + ":k=" + std::to_string(k) +
         ":p=" + std::to_string(p);
  r.params = {{"family", g.name()},
              {"k", std::to_string(k)},
              {"p", std::to_string(p)},
              {"m", mtuple_string(M)}};

  PolyQ lhs = orbit_moment_sum(g, k, M);
  PolyQ rhs = orbit_moment_sum(g, 1, M).scaled(
      Rat(int_pow(2, static_cast<unsigned long>(k - 1)) *
          binomial(n - 1, static_cast<unsigned long>(k - 1))));
  for (int j = 2; j <= k; ++j) {
    Int c = int_pow(2, static_cast<unsigned long>(k)) *
            binomial(n - j, static_cast<unsigned long>(k - j));
    if (c == 0) continue;
    rhs += even_multiplicity_sum(g, p, j, M).scaled(Rat(c));
  }
  return finish(std::move(r), lhs - rhs, sw);
}

VerificationReport verify_orbit_decomposition_randomized(const GroupType& g,
                                                         int k, int p,
                                                         int trials,
                                                         std::uint64_t seed) {
  Stopwatch sw;
  VerificationReport r;
  r.id = "orbit-decomposition:" + g.name() + ":k=" + std::to_string(k) +
         ":p=" + std::to_string(p);
  r.params = {{"family", g.name()},
              {"k", std::to_string(k)},
              {"p", std::to_string(p)},
              {"trials", std::to_string(trials)}};
  r.seed = seed;
  std::mt19937_64 rng(seed);
  PolyQ witness = zero_e(g);
  for (int t = 0; t < trials && witness.is_zero(); ++t) {
    MTuple M = random_mtuple(rng, p);
    VerificationReport single = verify_orbit_decomposition(g, k, p, M);
    witness = single.witness;
    if (!witness.is_zero()) r.params["failing_m"] = mtuple_string(M);
  }
  return finish(std::move(r), std::move(witness), sw);
}

VerificationReport verify_degree4_identity(const GroupType& g) {
  Stopwatch sw;
  const int n = g.rank;
  VerificationReport r;
  r.id = "degree4-identity:" + g.name();
  r.params = {{"family", g.name()}};
  PolyQ lhs = phi_rho_combination(g, 4, {{2, 1}, {1, Int(-2 * (n - 1))}});
  return finish(std::move(r), lhs - p_elem(n, 2), sw);
}

VerificationReport verify_degree6_identity(const GroupType& g) {
  Stopwatch sw;
  const int n = g.rank;
  if ((g.family == Family::B && n < 4) || (g.family == Family::D && n < 5))
    throw std::invalid_argument("verify_degree6_identity: rank below the "
                                "stated range");
  VerificationReport r;
  r.id = "degree6-identity:" + g.name();
  r.params = {{"family", g.name()}};
  PolyQ lhs = phi_rho_combination(
      g, 6,
      {{3, 1}, {2, Int(-2 * (n - 2))}, {1, Int(2 * (n - 1) * (n - 2))}});
  return finish(std::move(r), lhs - p_elem(n, 3), sw);
}

VerificationReport verify_top_product(const GroupType& g) {
  Stopwatch sw;
  if (g.family != Family::D)
    throw std::invalid_argument("verify_top_product: family D only");
  const int n = g.rank;
  VerificationReport r;
  r.id = "top-product:" + g.name();
  r.params = {{"family", g.name()}};
  MTuple ones(static_cast<std::size_t>(n), 1);
  PolyQ lhs = orbit_moment_sum(g, n, ones) - orbit_moment_sum(g, n - 1, ones);
  PolyQ rhs = q_prime(g).scaled(Rat(factorial(static_cast<unsigned long>(n))));
  return finish(std::move(r), lhs - rhs, sw);
}

VerificationReport verify_top_product_equal(const GroupType& g, int trials,
                                            std::uint64_t seed) {
  Stopwatch sw;
  if (g.family != Family::D)
    throw std::invalid_argument("verify_top_product_equal: family D only");
  const int n = g.rank;
  VerificationReport r;
  r.id = "top-product-equal:" + g.name();
  r.params = {{"family", g.name()}, {"trials", std::to_string(trials)}};
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> plen(1, n - 1);
  PolyQ witness = zero_e(g);
  for (int t = 0; t < trials && witness.is_zero(); ++t) {
    int p = plen(rng);
    MTuple M = random_mtuple(rng, p);
    witness = orbit_moment_sum(g, n, M) - orbit_moment_sum(g, n - 1, M);
    if (!witness.is_zero()) r.params["failing_m"] = mtuple_string(M);
  }
  return finish(std::move(r), std::move(witness), sw);
}

VerificationReport verify_q_prime_image(int n) {
  Stopwatch sw;
  GroupType g(Family::D, n);
  VerificationReport r;
  r.id = "q-prime-image:" + g.name();
  r.params = {{"family", g.name()}};
  PolyQ lhs = phi_rho_cached(g, n, n) - phi_rho_cached(g, n, n - 1);
  return finish(std::move(r), lhs - q_prime(g), sw);
}

CombinationCoeffs solve_combination_coeffs(const GroupType& g, int i) {
  const int n = g.rank;
  const int small_max = g.family == Family::B ? n - 1 : n - 2;
  if (i < 2) throw std::invalid_argument("solve_combination_coeffs: i >= 2");
  if (i > small_max)
    throw std::invalid_argument(
        "solve_combination_coeffs: rank too small for i");

  // Triangular solve from k = i-2 downward.
  std::vector<Rat> a(static_cast<std::size_t>(i), Rat(0));  // a[1..i-1]
  for (int k = i - 2; k >= 0; --k) {
    Rat sum(int_pow(2, static_cast<unsigned long>(i)) *
            binomial(n - 1 - k, static_cast<unsigned long>(i - 1 - k)));
    for (int j = k + 1; j <= i - 2; ++j)
      sum += Rat(int_pow(2, static_cast<unsigned long>(j + 1)) *
                 binomial(n - 1 - k, static_cast<unsigned long>(j - k))) *
             a[static_cast<std::size_t>(j + 1)];
    a[static_cast<std::size_t>(k + 1)] =
        -sum / Rat(int_pow(2, static_cast<unsigned long>(k + 1)));
  }

  CombinationCoeffs out{g, i, {}, {}, ""};
  for (int j = 1; j <= i - 1; ++j) {
    const Rat& v = a[static_cast<std::size_t>(j)];
    if (!is_integer(v))
      throw std::domain_error("solve_combination_coeffs: non-integer a_" +
                              std::to_string(j) + " = " + to_string(v));
    out.a.push_back(v.get_num());
  }

  // Candidate assignments: a_j on rho(omega_{i-j}) versus a_j on
  // rho(omega_j). The verified identity arbitrates.
  std::map<int, Int> literal, reversed;
  literal[i] = 1;
  reversed[i] = 1;
  for (int j = 1; j <= i - 1; ++j) {
    literal[i - j] = out.a[static_cast<std::size_t>(j - 1)];
    reversed[j] = out.a[static_cast<std::size_t>(j - 1)];
  }

  PolyQ target = p_elem(n, i);
  bool literal_ok =
      (phi_rho_combination(g, 2 * i, literal) - target).is_zero();
  bool reversed_ok =
      literal == reversed
          ? literal_ok
          : (phi_rho_combination(g, 2 * i, reversed) - target).is_zero();

  if (literal_ok) {
    out.coeff_on_omega = literal;
    out.pairing = literal == reversed ? "coincide" : "a_j->omega_{i-j}";
  } else if (reversed_ok) {
    out.coeff_on_omega = reversed;
    out.pairing = "a_j->omega_j";
  } else {
    throw std::domain_error(
        "solve_combination_coeffs: neither assignment verifies for " +
        g.name() + ", i=" + std::to_string(i));
  }
  return out;
}

VerificationReport verify_elementary_combination(const GroupType& g, int i) {
  Stopwatch sw;
  VerificationReport r;
  r.id = "elementary-combination:" + g.name() + ":i=" + std::to_string(i);
  r.params = {{"family", g.name()}, {"i", std::to_string(i)}};
  CombinationCoeffs cc = solve_combination_coeffs(g, i);
  r.params["pairing"] = cc.pairing;
  for (const auto& [k, c] : cc.coeff_on_omega)
    r.params["coeff_omega_" + std::to_string(k)] = to_string(c);
  PolyQ lhs = phi_rho_combination(g, 2 * i, cc.coeff_on_omega);
  return finish(std::move(r), lhs - p_elem(g.rank, i), sw);
}

namespace {

void build_certificate_terms(const GroupType& g, int i,
                             NewtonCertificate& cert) {
  if (cert.combos.count(i)) return;
  if (i == 1) {
    cert.combos[1] = {{1, Int(1)}};
    return;
  }
  CombinationCoeffs cc = solve_combination_coeffs(g, i);
  cert.combos[i] = cc.coeff_on_omega;
  for (int j = 1; j <= i - 1; ++j) build_certificate_terms(g, j, cert);
}

// Flattened terms expressing q_{2i}; sign convention from the classical
// Newton identity (-1)^(i-1) q_{2i} = i p_i - sum (-1)^(j-1) p_{i-j} q_{2j}.
std::vector<NewtonCertificate::Term> newton_terms(const GroupType& g, int i) {
  const int n = g.rank;
  std::vector<NewtonCertificate::Term> out;
  Int lead = (i % 2 == 1) ? Int(i) : Int(-i);  // (-1)^(i-1) * i
  out.push_back({lead, PolyQ::constant(VarBasis::E, n, Rat(1)), i});
  for (int j = 1; j <= i - 1; ++j) {
    // -(-1)^(i-1) (-1)^(j-1) p_{i-j} q_{2j}
    Int sign = ((i - 1 + j - 1) % 2 == 0) ? Int(-1) : Int(1);
    PolyQ multiplier = p_elem(n, i - j);
    for (const NewtonCertificate::Term& t : newton_terms(g, j)) {
      out.push_back(
          {sign * t.scalar, multiplier * t.multiplier, t.combo});
    }
  }
  return out;
}

}  // namespace

NewtonCertificate newton_certificate(const GroupType& g, int i) {
  if (i < 2) throw std::invalid_argument("newton_certificate: i >= 2");
  NewtonCertificate cert{g, i, {}, {}};
  build_certificate_terms(g, i, cert);
  cert.terms = newton_terms(g, i);
  return cert;
}

VerificationReport replay(const NewtonCertificate& cert) {
  Stopwatch sw;
  const GroupType& g = cert.group;
  VerificationReport r;
  r.id = "newton-certificate:" + g.name() + ":i=" + std::to_string(cert.i);
  r.params = {{"family", g.name()},
              {"i", std::to_string(cert.i)},
              {"terms", std::to_string(cert.terms.size())},
              {"index_form", "classical p_{i-j}"}};

  // Every referenced combination must re-expand to its elementary target.
  for (const auto& [j, coeffs] : cert.combos) {
    PolyQ image = phi_rho_combination(g, 2 * j, coeffs);
    PolyQ diff = image - p_elem(g.rank, j);
    if (!diff.is_zero()) {
      r.params["failed_combination"] = std::to_string(j);
      return finish(std::move(r), std::move(diff), sw);
    }
  }

  PolyAccumulator<Rat> acc(VarBasis::E, g.rank);
  for (const NewtonCertificate::Term& t : cert.terms) {
    PolyQ image = phi_rho_combination(g, 2 * t.combo, cert.combos.at(t.combo));
    acc.add(t.multiplier * image, Rat(t.scalar));
  }
  PolyQ total = acc.take();
  return finish(std::move(r), total - q_power_sum(g, cert.i), sw);
}

VerificationReport newton_verify(int n, int i) {
  Stopwatch sw;
  if (n < 1 || i < 1 || i > n)
    throw std::invalid_argument("newton_verify: need 1 <= i <= n");

  // Works directly in n variables; no group structure involved.
  auto power_sum = [&](int j) {
    std::map<Monomial, Rat> acc;
    for (int v = 0; v < n; ++v)
      acc.emplace(Monomial::variable(n, v, 2 * j), Rat(1));
    return PolyQ::from_map(VarBasis::E, n, acc);
  };

  PolyQ lhs = power_sum(i).scaled(Rat(i % 2 == 1 ? 1 : -1));

  PolyQ classical = p_elem(n, i).scaled(Rat(i));
  PolyQ printed = classical;
  for (int j = 1; j <= i - 1; ++j) {
    Rat sign(j % 2 == 1 ? -1 : 1);  // subtracting (-1)^(j-1) terms
    classical += (p_elem(n, i - j) * power_sum(j)).scaled(sign);
    if (i - 1 - j >= 0)
      printed += (p_elem(n, i - 1 - j) * power_sum(j)).scaled(sign);
  }

  PolyQ classical_witness = lhs - classical;
  PolyQ printed_witness = lhs - printed;

  VerificationReport r;
  r.id = "newton-identity:n=" + std::to_string(n) + ":i=" + std::to_string(i);
  r.params = {{"n", std::to_string(n)},
              {"i", std::to_string(i)},
              {"classical_holds", classical_witness.is_zero() ? "yes" : "no"},
              {"printed_holds", printed_witness.is_zero() ? "yes" : "no"},
              {"verified_form",
               classical_witness.is_zero() ? "p_{i-j} (classical)" : "none"}};
  return finish(std::move(r), std::move(classical_witness), sw);
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& id) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h ^ base;
}

std::vector<SuiteCase> suite_catalog(const SuiteConfig& config) {
  std::vector<SuiteCase> cases;
  const int trials = config.trials;
  const std::uint64_t base = config.seed;

  auto add = [&](std::string id, std::function<VerificationReport()> fn) {
    if (!config.id_prefixes.empty()) {
      bool match = false;
      for (const std::string& p : config.id_prefixes)
        if (id.rfind(p, 0) == 0) match = true;
      if (!match) return;
    }
    cases.push_back({std::move(id), std::move(fn)});
  };

  std::vector<GroupType> groups;
  for (int n = 3; n <= 6; ++n) groups.emplace_back(Family::B, n);
  for (int n = 4; n <= 6; ++n) groups.emplace_back(Family::D, n);

  std::vector<int> newton_ns;
  for (const GroupType& g : groups) {
    if (config.family && g.family != *config.family) continue;
    if (config.rank && g.rank != *config.rank) continue;
    const int n = g.rank;
    const int small_max = g.family == Family::B ? n - 1 : n - 2;

    for (int k = 1; k <= small_max; ++k)
      for (int p : {1, 3, 5}) {
        std::string id = "vanishing:" + g.name() + ":k=" + std::to_string(k) +
                         ":p=" + std::to_string(p);
        add(id, [=] {
          return verify_vanishing(g, k, p, trials, derive_seed(base, id));
        });
      }
    if (g.family == Family::D && n % 2 == 1)
      for (int p : {2, 4}) {
        std::string id = "vanishing:" + g.name() + ":k=" + std::to_string(n) +
                         ":p=" + std::to_string(p);
        add(id, [=] {
          return verify_vanishing(g, n, p, trials, derive_seed(base, id));
        });
      }
    if (g.family == Family::D)
      for (int p : {1, 3, 5})
        if (p < n) {
          std::string id = "vanishing:" + g.name() +
                           ":k=" + std::to_string(n) +
                           ":p=" + std::to_string(p);
          add(id, [=] {
            return verify_vanishing(g, n, p, trials, derive_seed(base, id));
          });
        }

    for (int k = 2; k <= std::min(4, small_max); ++k)
      for (int p : {2, 4}) {
        std::string id = "orbit-decomposition:" + g.name() +
                         ":k=" + std::to_string(k) + ":p=" + std::to_string(p);
        add(id, [=] {
          return verify_orbit_decomposition_randomized(
              g, k, p, trials, derive_seed(base, id));
        });
      }

    add("degree4-identity:" + g.name(),
        [=] { return verify_degree4_identity(g); });
    if ((g.family == Family::B && n >= 4) ||
        (g.family == Family::D && n >= 5))
      add("degree6-identity:" + g.name(),
          [=] { return verify_degree6_identity(g); });

    if (g.family == Family::D) {
      add("top-product:" + g.name(), [=] { return verify_top_product(g); });
      std::string id = "top-product-equal:" + g.name();
      add(id, [=] {
        return verify_top_product_equal(g, trials, derive_seed(base, id));
      });
      add("q-prime-image:" + g.name(),
          [=] { return verify_q_prime_image(n); });
      if (n % 2 == 1)
        add("orbit-negation:" + g.name(), [=] {
          Stopwatch sw;
          VerificationReport r;
          r.id = "orbit-negation:" + g.name();
          r.params = {{"family", g.name()}};
          bool ok = orbit_negation_check(g);
          r.pass = ok;
          r.witness = PolyQ::zero(VarBasis::E, n);
          if (!ok) {
            r.params["note"] = "orbit sets differ";
            r.witness = PolyQ::constant(VarBasis::E, n, Rat(1));
          }
          r.millis = sw.millis();
          return r;
        });
    }

    for (int i = 2; i <= std::min(4, small_max); ++i) {
      add("elementary-combination:" + g.name() + ":i=" + std::to_string(i),
          [=] { return verify_elementary_combination(g, i); });
      add("newton-certificate:" + g.name() + ":i=" + std::to_string(i),
          [=] { return replay(newton_certificate(g, i)); });
    }

    if (std::find(newton_ns.begin(), newton_ns.end(), n) == newton_ns.end())
      newton_ns.push_back(n);
  }

  for (int n : newton_ns)
    for (int i = 1; i <= std::min(n, 4); ++i)
      add("newton-identity:n=" + std::to_string(n) + ":i=" + std::to_string(i),
          [=] { return newton_verify(n, i); });

  std::sort(cases.begin(), cases.end(),
            [](const SuiteCase& a, const SuiteCase& b) { return a.id < b.id; });
  return cases;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  std::vector<SuiteCase> cases = suite_catalog(config);
  std::vector<VerificationReport> reports(cases.size());

  int threads = config.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("EXPONENT_THREADS"))
      threads = std::max(1, std::atoi(env));
    else
      threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  threads = std::max(1, std::min<int>(threads,
                                      static_cast<int>(cases.size())));

  std::atomic<std::size_t> next(0);
  auto worker = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= cases.size()) return;
      reports[idx] = cases[idx].run();
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  // Catalog order is already sorted by id.
  return reports;
}

}  // namespace spinexp
