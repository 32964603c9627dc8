// The integral group ring Z[Lambda]: formal sums of exponentials e^lambda,
// orbit sums, the invariant augmentation-ideal generators, and the
// truncated characteristic map phi computed two independent ways.
#pragma once

#include "spinexp/polynomial.hpp"
#include "spinexp/weyl.hpp"

#include <map>
#include <optional>
#include <vector>

namespace spinexp {

/// Finite integer combination of exponentials e^lambda, keyed by the
/// omega coordinates of lambda.
class GroupRingElement {
 public:
  using TermMap = std::map<Eigen::VectorXi, Int, LexLess>;

  explicit GroupRingElement(GroupType g) : group_(g) {}

  static GroupRingElement unit(const GroupType& g);               // e^0
  static GroupRingElement exponential(const Weight& w);           // e^w

  const GroupType& group() const { return group_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  void add_term(const Eigen::VectorXi& omega, const Int& c);

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement scaled(const Int& c) const;
  bool operator==(const GroupRingElement& o) const;

 private:
  GroupType group_;
  TermMap terms_;
};

/// rho(lambda): sum of e^mu over the W-orbit of lambda.
GroupRingElement rho(const GroupType& g, const Weight& lambda);

/// Sum of coefficients (image of the map sending every e^lambda to 1).
Int augmentation(const GroupRingElement& x);

/// Generators rho(lambda) - |W(lambda)| e^0 of the W-invariant
/// augmentation ideal, for the fundamental weights plus an optional extra
/// grid of dominant weights.
std::vector<GroupRingElement> ikw_generators(
    const GroupType& g,
    const std::vector<Weight>& extra_dominant = {});

/// Truncation through total degree max_deg of the product
/// prod_j (1 - omega_j)^(-a_j) for a single exponential e^lambda;
/// omega-basis, integer coefficients.
PolyZ phi_omega_truncated(const GroupType& g, const Eigen::VectorXi& omega,
                          int max_deg);

/// Degree-i component of the truncated characteristic map, omega-basis.
PolyZ phi_omega(const GroupType& g, int i, const GroupRingElement& x);

/// Same image expanded into e-coordinates (exact rationals).
PolyQ phi(const GroupType& g, int i, const GroupRingElement& x);

/// omega-basis polynomial rewritten in e-coordinates.
PolyQ omega_to_e(const GroupType& g, const PolyZ& p);
PolyQ omega_to_e(const GroupType& g, const PolyQ& p);

/// e-basis polynomial with coefficients in the lattice ring rewritten in
/// omega-coordinates; rejects inputs with non-integer omega coefficients.
PolyZ e_to_omega_integral(const GroupType& g, const PolyQ& p);

/// lambda(m) = sum_j a_j omega_j^m for lambda = sum_j a_j omega_j,
/// expanded in e-coordinates (degree-m polynomial).
PolyQ lambda_moment(const GroupType& g, const Eigen::VectorXi& omega, int m);

/// Coefficients i!/z_mu of the partition expansion of i! phi^(i)(e^lambda):
/// i! phi^(i)(e^lambda) = sum over partitions mu of i of
/// (i!/z_mu) prod_{m in mu} lambda(m).
struct PartitionExpansion {
  int i = 0;
  std::map<std::vector<int>, Int> coeff;  // partition (descending) -> i!/z
};

PartitionExpansion partition_expansion(int i);

/// All partitions of i, parts descending.
std::vector<std::vector<int>> partitions_of(int i);

/// Independent evaluation of phi^(i)(e^lambda) through the partition
/// expansion; must agree with phi() exactly.
PolyQ phi_via_partitions(const GroupType& g, int i, const Weight& lambda);

}  // namespace spinexp
