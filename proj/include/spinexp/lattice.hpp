// Weight lattices of Spin(2n+1) (family B, n >= 3) and Spin(2n) (family D,
// n >= 4): fundamental weights, omega <-> e coordinate changes and the
// simple-reflection action on omega coordinates.
#pragma once

#include "spinexp/arith.hpp"

#include <compare>
#include <string>
#include <vector>

namespace spinexp {

enum class Family { B, D };

struct GroupType {
  Family family;
  int rank;

  GroupType(Family f, int n);

  bool operator==(const GroupType&) const = default;
  std::string name() const;  // "B3", "D4", ...
};

/// Lattice point in omega coordinates. e-coordinates are derived on demand
/// and are rationals with denominator dividing 2.
struct Weight {
  GroupType group;
  Eigen::VectorXi omega;

  Weight(GroupType g, Eigen::VectorXi coords);

  bool is_zero() const { return omega.isZero(); }
  Weight operator+(const Weight& other) const;
  Weight operator-() const;
  bool operator==(const Weight& other) const;
  std::strong_ordering operator<=>(const Weight& other) const;
};

/// Lexicographic order on raw omega-coordinate vectors.
struct LexLess {
  bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  }
};

/// Rows: e-coordinates of omega_1 .. omega_n.
RatMat fundamental_weight_table(const GroupType& g);

Weight fundamental_weight(const GroupType& g, int k);  // 1-based k

Weight zero_weight(const GroupType& g);

RatVec to_e_coords(const Weight& w);
RatVec to_e_coords(const GroupType& g, const Eigen::VectorXi& omega);

/// Inverse coordinate change; rejects vectors whose omega coordinates are
/// not integers, naming the offending coordinate.
Weight from_e_coords(const GroupType& g, const RatVec& e);

/// Twice the e-coordinates — always integral, convenient for exact
/// signed-permutation arithmetic.
Eigen::VectorXi to_doubled_e_coords(const Weight& w);
Weight from_doubled_e_coords(const GroupType& g, const Eigen::VectorXi& e2);

/// The n simple reflections as integer matrices acting on omega
/// coordinates (weight omega |-> R * omega). Each is an involution.
std::vector<Eigen::MatrixXi> simple_reflection_matrices(const GroupType& g);

/// e_1, ..., e_n as weights (omega coordinates are integral in both
/// families).
std::vector<Weight> standard_basis_weights(const GroupType& g);

/// |W|: 2^n n! for B, 2^(n-1) n! for D.
Int weyl_group_order(const GroupType& g);

}  // namespace spinexp
