#include "spinexp/lattice.hpp"

#include <Eigen/LU>

#include <stdexcept>

namespace spinexp {

GroupType::GroupType(Family f, int n) : family(f), rank(n) {
  if (f == Family::B && n < 3)
    throw std::invalid_argument("family B requires rank n >= 3");
  if (f == Family::D && n < 4)
    throw std::invalid_argument("family D requires rank n >= 4");
}

std::string GroupType::name() const {
  return (family == Family::B ? "B" : "D") + std::to_string(rank);
}

Weight::Weight(GroupType g, Eigen::VectorXi coords)
    : group(g), omega(std::move(coords)) {
  if (omega.size() != group.rank)
    throw std::invalid_argument("Weight: coordinate length != rank");
}

Weight Weight::operator+(const Weight& other) const {
  if (!(group == other.group))
    throw std::invalid_argument("Weight: mixed group types");
  return Weight(group, omega + other.omega);
}

Weight Weight::operator-() const { return Weight(group, -omega); }

bool Weight::operator==(const Weight& other) const {
  return group == other.group && omega == other.omega;
}

std::strong_ordering Weight::operator<=>(const Weight& other) const {
  for (Eigen::Index i = 0; i < omega.size() && i < other.omega.size(); ++i)
    if (omega(i) != other.omega(i))
      return omega(i) <=> other.omega(i);
  return omega.size() <=> other.omega.size();
}

RatMat fundamental_weight_table(const GroupType& g) {
  const int n = g.rank;
  RatMat F = RatMat::Zero(n, n);
  const Rat half = make_rat(1, 2);
  if (g.family == Family::B) {
    for (int k = 0; k < n - 1; ++k)
      for (int j = 0; j <= k; ++j) F(k, j) = 1;
    for (int j = 0; j < n; ++j) F(n - 1, j) = half;
  } else {
    for (int k = 0; k < n - 2; ++k)
      for (int j = 0; j <= k; ++j) F(k, j) = 1;
    for (int j = 0; j < n - 1; ++j) F(n - 2, j) = half;
    F(n - 2, n - 1) = -half;
    for (int j = 0; j < n; ++j) F(n - 1, j) = half;
  }
  return F;
}

Weight fundamental_weight(const GroupType& g, int k) {
  if (k < 1 || k > g.rank)
    throw std::out_of_range("fundamental_weight: k outside 1..n");
  Eigen::VectorXi a = Eigen::VectorXi::Zero(g.rank);
  a(k - 1) = 1;
  return Weight(g, a);
}

Weight zero_weight(const GroupType& g) {
  return Weight(g, Eigen::VectorXi::Zero(g.rank));
}

RatVec to_e_coords(const GroupType& g, const Eigen::VectorXi& omega) {
  RatMat F = fundamental_weight_table(g);
  RatVec e = RatVec::Zero(g.rank);
  for (int k = 0; k < g.rank; ++k) {
    if (omega(k) == 0) continue;
    Rat a(omega(k));
    for (int j = 0; j < g.rank; ++j) e(j) += a * F(k, j);
  }
  return e;
}

RatVec to_e_coords(const Weight& w) { return to_e_coords(w.group, w.omega); }

namespace {

// (F^T)^{-1}, cached per group type.
RatMat inverse_table_transposed(const GroupType& g) {
  RatMat Ft = fundamental_weight_table(g).transpose();
  Eigen::FullPivLU<RatMat> lu(Ft);
  return lu.inverse();
}

}  // namespace

Weight from_e_coords(const GroupType& g, const RatVec& e) {
  if (e.size() != g.rank)
    throw std::invalid_argument("from_e_coords: length != rank");
  RatVec a = inverse_table_transposed(g) * e;
  Eigen::VectorXi coords(g.rank);
  for (int j = 0; j < g.rank; ++j) {
    if (!is_integer(a(j)))
      throw std::domain_error("from_e_coords: vector is not a lattice point "
                              "(omega coordinate " +
                              std::to_string(j + 1) + " = " + to_string(a(j)) +
                              ")");
    if (!a(j).get_num().fits_sint_p())
      throw std::domain_error("from_e_coords: omega coordinate " +
                              std::to_string(j + 1) + " out of range");
    coords(j) = static_cast<int>(a(j).get_num().get_si());
  }
  return Weight(g, coords);
}

Eigen::VectorXi to_doubled_e_coords(const Weight& w) {
  RatVec e = to_e_coords(w);
  Eigen::VectorXi out(e.size());
  for (Eigen::Index j = 0; j < e.size(); ++j) {
    Rat two_e = Rat(2) * e(j);
    if (!is_integer(two_e))
      throw std::logic_error("weight has denominator > 2");
    if (!two_e.get_num().fits_sint_p())
      throw std::domain_error("to_doubled_e_coords: coordinate out of range");
    out(j) = static_cast<int>(two_e.get_num().get_si());
  }
  return out;
}

Weight from_doubled_e_coords(const GroupType& g, const Eigen::VectorXi& e2) {
  RatVec e(e2.size());
  for (Eigen::Index j = 0; j < e2.size(); ++j) e(j) = make_rat(e2(j), 2);
  return from_e_coords(g, e);
}

std::vector<Eigen::MatrixXi> simple_reflection_matrices(const GroupType& g) {
  const int n = g.rank;
  RatMat Ft = fundamental_weight_table(g).transpose();
  RatMat Fti = inverse_table_transposed(g);

  std::vector<Eigen::MatrixXi> out;
  out.reserve(n);
  for (int s = 0; s < n; ++s) {
    // Reflection on e-coordinates.
    RatMat S = RatMat::Zero(n, n);
    for (int j = 0; j < n; ++j) S(j, j) = 1;
    if (s < n - 1) {
      S(s, s) = 0;
      S(s + 1, s + 1) = 0;
      S(s, s + 1) = 1;
      S(s + 1, s) = 1;
    } else if (g.family == Family::B) {
      S(n - 1, n - 1) = -1;
    } else {
      S(n - 2, n - 2) = 0;
      S(n - 1, n - 1) = 0;
      S(n - 2, n - 1) = -1;
      S(n - 1, n - 2) = -1;
    }
    RatMat R = Fti * S * Ft;
    Eigen::MatrixXi Ri(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!is_integer(R(i, j)))
          throw std::logic_error("reflection matrix is not integral");
        Ri(i, j) = static_cast<int>(R(i, j).get_num().get_si());
      }
    out.push_back(std::move(Ri));
  }
  return out;
}

std::vector<Weight> standard_basis_weights(const GroupType& g) {
  std::vector<Weight> out;
  out.reserve(g.rank);
  for (int j = 0; j < g.rank; ++j) {
    RatVec e = RatVec::Zero(g.rank);
    e(j) = 1;
    out.push_back(from_e_coords(g, e));
  }
  return out;
}

Int weyl_group_order(const GroupType& g) {
  Int order = factorial(static_cast<unsigned long>(g.rank));
  unsigned long flips =
      g.family == Family::B ? static_cast<unsigned long>(g.rank)
                            : static_cast<unsigned long>(g.rank - 1);
  return order * int_pow(2, flips);
}

}  // namespace spinexp
