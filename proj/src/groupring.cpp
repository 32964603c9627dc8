#include "spinexp/groupring.hpp"

#include <algorithm>

namespace spinexp {

GroupRingElement GroupRingElement::unit(const GroupType& g) {
  GroupRingElement e(g);
  e.add_term(Eigen::VectorXi::Zero(g.rank), 1);
  return e;
}

GroupRingElement GroupRingElement::exponential(const Weight& w) {
  GroupRingElement e(w.group);
  e.add_term(w.omega, 1);
  return e;
}

void GroupRingElement::add_term(const Eigen::VectorXi& omega, const Int& c) {
  if (omega.size() != group_.rank)
    throw std::invalid_argument("GroupRingElement: coordinate length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(omega, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  if (!(group_ == o.group_))
    throw std::invalid_argument("group ring: mixed group types");
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  if (!(group_ == o.group_))
    throw std::invalid_argument("group ring: mixed group types");
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, Int(-c));
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  if (!(group_ == o.group_))
    throw std::invalid_argument("group ring: mixed group types");
  GroupRingElement r(group_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(group_);
  for (const auto& [w, c] : terms_) r.add_term(w, Int(-c));
  return r;
}

GroupRingElement GroupRingElement::scaled(const Int& c) const {
  GroupRingElement r(group_);
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.add_term(w, k * c);
  return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return group_ == o.group_ && terms_ == o.terms_;
}

GroupRingElement rho(const GroupType& g, const Weight& lambda) {
  Orbit orb = orbit(g, lambda);
  GroupRingElement r(g);
  for (const Eigen::VectorXi& v : orb.elements) r.add_term(v, 1);
  return r;
}

Int augmentation(const GroupRingElement& x) {
  Int s = 0;
  for (const auto& [w, c] : x.terms()) s += c;
  return s;
}

std::vector<GroupRingElement> ikw_generators(
    const GroupType& g, const std::vector<Weight>& extra_dominant) {
  std::vector<GroupRingElement> out;
  auto push = [&](const Weight& w) {
    GroupRingElement r = rho(g, w);
    Int size(static_cast<long>(orbit(g, w).size()));
    out.push_back(r - GroupRingElement::unit(g).scaled(size));
  };
  for (int k = 1; k <= g.rank; ++k) push(fundamental_weight(g, k));
  for (const Weight& w : extra_dominant)
    if (!w.is_zero()) push(w);
  return out;
}

PolyZ phi_omega_truncated(const GroupType& g, const Eigen::VectorXi& omega,
                          int max_deg) {
  if (max_deg < 0)
    throw std::invalid_argument("phi_omega_truncated: negative degree");
  const int n = g.rank;
  PolyZ prod = PolyZ::constant(VarBasis::Omega, n, 1);
  for (int j = 0; j < n; ++j) {
    if (omega(j) == 0) continue;
    // (1 - w_j)^(-a) truncated: sum_k C(a+k-1, k) w_j^k.
    PolyZ series(VarBasis::Omega, n);
    std::map<Monomial, Int> acc;
    for (int k = 0; k <= max_deg; ++k) {
      Int c = binomial(Int(omega(j)) + k - 1, static_cast<unsigned long>(k));
      if (c != 0) acc.emplace(Monomial::variable(n, j, k), c);
    }
    series = PolyZ::from_map(VarBasis::Omega, n, acc);
    prod = mul(prod, series, max_deg);
  }
  return prod;
}

PolyZ phi_omega(const GroupType& g, int i, const GroupRingElement& x) {
  if (i < 0) throw std::invalid_argument("phi: negative degree");
  if (!(x.group() == g)) throw std::invalid_argument("phi: wrong group");
  PolyAccumulator<Int> acc(VarBasis::Omega, g.rank);
  for (const auto& [w, c] : x.terms())
    acc.add(phi_omega_truncated(g, w, i).homogeneous_component(i), c);
  return acc.take();
}

namespace {

// omega_j as degree-1 polynomials in the e-basis.
std::vector<PolyQ> omega_images_in_e(const GroupType& g) {
  RatMat F = fundamental_weight_table(g);
  std::vector<PolyQ> images;
  images.reserve(g.rank);
  for (int k = 0; k < g.rank; ++k) {
    std::map<Monomial, Rat> acc;
    for (int j = 0; j < g.rank; ++j)
      if (F(k, j) != 0) acc.emplace(Monomial::variable(g.rank, j, 1), F(k, j));
    images.push_back(PolyQ::from_map(VarBasis::E, g.rank, acc));
  }
  return images;
}

// e_j as degree-1 polynomials in the omega-basis (integer coordinates).
std::vector<PolyQ> e_images_in_omega(const GroupType& g) {
  std::vector<Weight> basis = standard_basis_weights(g);
  std::vector<PolyQ> images;
  images.reserve(g.rank);
  for (const Weight& w : basis) {
    std::map<Monomial, Rat> acc;
    for (int k = 0; k < g.rank; ++k)
      if (w.omega(k) != 0)
        acc.emplace(Monomial::variable(g.rank, k, 1), Rat(w.omega(k)));
    images.push_back(PolyQ::from_map(VarBasis::Omega, g.rank, acc));
  }
  return images;
}

}  // namespace

PolyQ omega_to_e(const GroupType& g, const PolyQ& p) {
  if (p.basis() != VarBasis::Omega)
    throw std::invalid_argument("omega_to_e: omega-basis input expected");
  return substitute_linear(p, omega_images_in_e(g));
}

PolyQ omega_to_e(const GroupType& g, const PolyZ& p) {
  return omega_to_e(g, to_rational(p));
}

PolyZ e_to_omega_integral(const GroupType& g, const PolyQ& p) {
  if (p.basis() != VarBasis::E)
    throw std::invalid_argument("e_to_omega_integral: e-basis input expected");
  PolyQ image = substitute_linear(p, e_images_in_omega(g));
  return to_integer_checked(image);
}

PolyQ phi(const GroupType& g, int i, const GroupRingElement& x) {
  return omega_to_e(g, phi_omega(g, i, x));
}

PolyQ lambda_moment(const GroupType& g, const Eigen::VectorXi& omega, int m) {
  if (m < 0) throw std::invalid_argument("lambda_moment: m >= 0 required");
  std::vector<PolyQ> omega_e = omega_images_in_e(g);
  PolyAccumulator<Rat> acc(VarBasis::E, g.rank);
  for (int j = 0; j < g.rank; ++j) {
    if (omega(j) == 0) continue;
    acc.add(pow(omega_e[static_cast<std::size_t>(j)], m), Rat(omega(j)));
  }
  return acc.take();
}

std::vector<std::vector<int>> partitions_of(int i) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Descending parts.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, i, i);
  return out;
}

PartitionExpansion partition_expansion(int i) {
  if (i < 1) throw std::invalid_argument("partition_expansion: i >= 1");
  PartitionExpansion out;
  out.i = i;
  Int fact = factorial(static_cast<unsigned long>(i));
  for (const std::vector<int>& mu : partitions_of(i)) {
    // z_mu = prod over distinct parts m of m^{k_m} k_m!.
    Int z = 1;
    int run = 0;
    for (std::size_t t = 0; t < mu.size(); ++t) {
      ++run;
      bool last_of_run = (t + 1 == mu.size() || mu[t + 1] != mu[t]);
      z *= mu[t];
      if (last_of_run) {
        z *= factorial(static_cast<unsigned long>(run));
        run = 0;
      }
    }
    Int c;
    mpz_divexact(c.get_mpz_t(), fact.get_mpz_t(), z.get_mpz_t());
    out.coeff.emplace(mu, c);
  }
  return out;
}

PolyQ phi_via_partitions(const GroupType& g, int i, const Weight& lambda) {
  if (i < 1) throw std::invalid_argument("phi_via_partitions: i >= 1");
  PartitionExpansion exp = partition_expansion(i);
  // Cache lambda(m) for the part sizes that occur.
  std::map<int, PolyQ> moments;
  for (const auto& [mu, c] : exp.coeff)
    for (int m : mu)
      if (!moments.count(m)) moments.emplace(m, lambda_moment(g, lambda.omega, m));
  PolyAccumulator<Rat> acc(VarBasis::E, g.rank);
  for (const auto& [mu, c] : exp.coeff) {
    PolyQ prod = PolyQ::constant(VarBasis::E, g.rank, Rat(1));
    for (int m : mu) prod = prod * moments.at(m);
    acc.add(prod, Rat(c));
  }
  PolyQ total = acc.take();
  return total.scaled(make_rat(1, factorial(static_cast<unsigned long>(i))));
}

}  // namespace spinexp
