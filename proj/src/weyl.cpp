#include "spinexp/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace spinexp {

WeylElement::WeylElement(GroupType g, Eigen::VectorXi p, Eigen::VectorXi s)
    : group(g), perm(std::move(p)), signs(std::move(s)) {
  const int n = group.rank;
  if (perm.size() != n || signs.size() != n)
    throw std::invalid_argument("WeylElement: length != rank");
  std::vector<bool> seen(n, false);
  int negatives = 0;
  for (int j = 0; j < n; ++j) {
    if (perm(j) < 0 || perm(j) >= n || seen[perm(j)])
      throw std::invalid_argument("WeylElement: not a permutation");
    seen[perm(j)] = true;
    if (signs(j) == -1)
      ++negatives;
    else if (signs(j) != 1)
      throw std::invalid_argument("WeylElement: signs must be +-1");
  }
  if (group.family == Family::D && negatives % 2 != 0)
    throw std::domain_error("WeylElement: family D needs an even number of "
                            "sign flips");
}

WeylElement WeylElement::identity(const GroupType& g) {
  Eigen::VectorXi p(g.rank), s(g.rank);
  for (int j = 0; j < g.rank; ++j) {
    p(j) = j;
    s(j) = 1;
  }
  return WeylElement(g, p, s);
}

Weight act(const WeylElement& w, const Weight& weight) {
  if (!(w.group == weight.group))
    throw std::invalid_argument("act: mixed group types");
  Eigen::VectorXi e2 = to_doubled_e_coords(weight);
  Eigen::VectorXi out = Eigen::VectorXi::Zero(e2.size());
  for (int j = 0; j < e2.size(); ++j) out(w.perm(j)) = w.signs(j) * e2(j);
  return from_doubled_e_coords(weight.group, out);
}

bool Orbit::contains(const Eigen::VectorXi& omega) const {
  return std::binary_search(elements.begin(), elements.end(), omega,
                            LexLess{});
}

std::vector<Weight> Orbit::weights() const {
  std::vector<Weight> out;
  out.reserve(elements.size());
  for (const Eigen::VectorXi& v : elements) out.emplace_back(group, v);
  return out;
}

Orbit orbit(const GroupType& g, const Weight& lambda) {
  if (!(lambda.group == g)) throw std::invalid_argument("orbit: wrong group");
  std::vector<Eigen::MatrixXi> refl = simple_reflection_matrices(g);
  std::set<Eigen::VectorXi, LexLess> seen;
  std::deque<Eigen::VectorXi> queue;
  seen.insert(lambda.omega);
  queue.push_back(lambda.omega);
  while (!queue.empty()) {
    Eigen::VectorXi v = queue.front();
    queue.pop_front();
    for (const Eigen::MatrixXi& R : refl) {
      Eigen::VectorXi u = R * v;
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  Orbit out{g, {seen.begin(), seen.end()}};
  return out;
}

namespace {

// Sign of the lowest-index nonzero e-coordinate; 0 for the zero vector.
int leading_sign(const Eigen::VectorXi& e2) {
  for (int j = 0; j < e2.size(); ++j)
    if (e2(j) != 0) return e2(j) > 0 ? 1 : -1;
  return 0;
}

}  // namespace

Orbit half_orbit_plus(const GroupType& g, int k) {
  const int n = g.rank;
  const int small_max = g.family == Family::B ? n - 1 : n - 2;
  const bool small_range = k >= 1 && k <= small_max;
  const bool spin_range = g.family == Family::D && n % 2 == 0 &&
                          (k == n - 1 || k == n);
  if (!small_range && !spin_range) {
    if (g.family == Family::D && n % 2 == 1 && (k == n - 1 || k == n))
      throw std::domain_error("half_orbit_plus: spin half-orbit is undefined "
                              "for odd n in family D");
    throw std::out_of_range("half_orbit_plus: k outside the defined range");
  }

  Orbit full = orbit(g, fundamental_weight(g, k));
  Orbit half{g, {}};
  for (const Eigen::VectorXi& v : full.elements) {
    Eigen::VectorXi e2 = to_doubled_e_coords(Weight(g, v));
    bool keep = small_range ? leading_sign(e2) > 0 : e2(0) > 0;
    if (keep) half.elements.push_back(v);
  }
  if (2 * half.elements.size() != full.elements.size())
    throw std::logic_error("half_orbit_plus: halves are not balanced");
  return half;
}

bool orbit_negation_check(const GroupType& g) {
  if (g.family != Family::D || g.rank % 2 == 0)
    throw std::invalid_argument("orbit_negation_check: family D with odd n "
                                "only");
  Orbit top = orbit(g, fundamental_weight(g, g.rank));
  Orbit sub = orbit(g, fundamental_weight(g, g.rank - 1));
  if (top.size() != sub.size()) return false;
  for (const Eigen::VectorXi& v : sub.elements) {
    Eigen::VectorXi neg = -v;
    if (!top.contains(neg)) return false;
  }
  return true;
}

}  // namespace spinexp
