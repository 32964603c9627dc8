// Weyl groups of the spin families as signed permutations of e-coordinates,
// orbit enumeration by closure under simple reflections, and the canonical
// half-orbits that split W(omega_k) into opposite halves.
#pragma once

#include "spinexp/lattice.hpp"

#include <vector>

namespace spinexp {

/// Signed permutation: e_j |-> signs(j) * e_{perm(j)} (0-based entries).
/// Family D requires an even number of negative signs.
struct WeylElement {
  GroupType group;
  Eigen::VectorXi perm;
  Eigen::VectorXi signs;

  WeylElement(GroupType g, Eigen::VectorXi p, Eigen::VectorXi s);
  static WeylElement identity(const GroupType& g);
};

/// Sorted duplicate-free orbit; elements stored as omega-coordinate vectors.
struct Orbit {
  GroupType group;
  std::vector<Eigen::VectorXi> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Eigen::VectorXi& omega) const;
  std::vector<Weight> weights() const;
};

Weight act(const WeylElement& w, const Weight& weight);

/// Full W-orbit of lambda, breadth-first closure under the simple
/// reflections, canonically sorted.
Orbit orbit(const GroupType& g, const Weight& lambda);

/// W_+(omega_k): for k in the small range (B: k <= n-1, D: k <= n-2) the
/// orbit elements whose lowest-index nonzero e-coordinate is positive; for
/// the D spin weights (even n only, k in {n-1, n}) the elements with
/// positive e_1-coefficient. Other inputs are undefined and rejected.
Orbit half_orbit_plus(const GroupType& g, int k);

/// For family D with odd n: checks W(omega_n) == -W(omega_{n-1}) as sets.
bool orbit_negation_check(const GroupType& g);

}  // namespace spinexp
