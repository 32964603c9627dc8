#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "spinexp/weyl.hpp"

#include <vector>

using namespace spinexp;

namespace {

Eigen::VectorXi int_vec(std::initializer_list<int> vals) {
  Eigen::VectorXi v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index j = 0;
  for (int x : vals) v(j++) = x;
  return v;
}

}  // namespace

TEST_CASE("signed permutation action on weights") {
  GroupType b3(Family::B, 3);
  Weight w1 = fundamental_weight(b3, 1);

  WeylElement id = WeylElement::identity(b3);
  CHECK(act(id, w1) == w1);

  // flip the sign of e_1
  WeylElement flip(b3, int_vec({0, 1, 2}), int_vec({-1, 1, 1}));
  Weight image = act(flip, w1);
  CHECK(to_e_coords(image) ==
        RatVec(to_e_coords(w1) * Rat(-1)));

  GroupType d4(Family::D, 4);
  Weight spin = fundamental_weight(d4, 4);
  WeylElement flip34(d4, int_vec({0, 1, 2, 3}), int_vec({1, 1, -1, -1}));
  RatVec e = to_e_coords(act(flip34, spin));
  const Rat half = make_rat(1, 2);
  CHECK(e(0) == half);
  CHECK(e(1) == half);
  CHECK(e(2) == -half);
  CHECK(e(3) == -half);

  // odd sign count is not an element of W(D4)
  CHECK_THROWS_AS(WeylElement(d4, int_vec({0, 1, 2, 3}),
                              int_vec({-1, 1, 1, 1})),
                  std::domain_error);
}

TEST_CASE("orbits agree with raw signed-permutation enumeration") {
  GroupType b3(Family::B, 3);
  Orbit o1 = orbit(b3, fundamental_weight(b3, 1));
  CHECK(o1.size() == 6);  // {+-e_1, +-e_2, +-e_3}
  auto brute = oracle::brute_orbit(b3, fundamental_weight(b3, 1));
  CHECK(std::vector<Eigen::VectorXi>(brute.begin(), brute.end()) ==
        o1.elements);

  GroupType d4(Family::D, 4);
  Orbit spin = orbit(d4, fundamental_weight(d4, 4));
  CHECK(spin.size() == 8);
  auto brute_spin = oracle::brute_orbit(d4, fundamental_weight(d4, 4));
  CHECK(std::vector<Eigen::VectorXi>(brute_spin.begin(), brute_spin.end()) ==
        spin.elements);
  for (const Eigen::VectorXi& v : spin.elements) {
    // even number of negative half-entries
    Eigen::VectorXi e2 = to_doubled_e_coords(Weight(d4, v));
    int negatives = 0;
    for (int j = 0; j < 4; ++j)
      if (e2(j) < 0) ++negatives;
    CHECK(negatives % 2 == 0);
  }

  GroupType b4(Family::B, 4);
  Orbit o2 = orbit(b4, fundamental_weight(b4, 2));
  CHECK(o2.size() == 24);  // 2^2 C(4,2)
  auto brute2 = oracle::brute_orbit(b4, fundamental_weight(b4, 2));
  CHECK(std::vector<Eigen::VectorXi>(brute2.begin(), brute2.end()) ==
        o2.elements);
}

TEST_CASE("orbit sizes 2^k C(n,k) in the decomposition range") {
  for (int n = 3; n <= 6; ++n) {
    GroupType g(Family::B, n);
    for (int k = 1; k <= n - 1; ++k) {
      Int expect = int_pow(2, static_cast<unsigned long>(k)) *
                   binomial(n, static_cast<unsigned long>(k));
      CHECK(Int(static_cast<long>(orbit(g, fundamental_weight(g, k)).size()))
            == expect);
    }
  }
  for (int n = 4; n <= 6; ++n) {
    GroupType g(Family::D, n);
    for (int k = 1; k <= n - 2; ++k) {
      Int expect = int_pow(2, static_cast<unsigned long>(k)) *
                   binomial(n, static_cast<unsigned long>(k));
      CHECK(Int(static_cast<long>(orbit(g, fundamental_weight(g, k)).size()))
            == expect);
    }
    // spin orbits
    CHECK(orbit(g, fundamental_weight(g, n)).size() ==
          (1u << static_cast<unsigned>(n - 1)));
    CHECK(orbit(g, fundamental_weight(g, n - 1)).size() ==
          (1u << static_cast<unsigned>(n - 1)));
  }
}

TEST_CASE("orbits are closed under every generator and sum to zero") {
  for (GroupType g : {GroupType(Family::B, 4), GroupType(Family::B, 6),
                      GroupType(Family::D, 5), GroupType(Family::D, 6)}) {
    std::vector<Eigen::MatrixXi> refl = simple_reflection_matrices(g);
    for (int k = 1; k <= g.rank; ++k) {
      Orbit o = orbit(g, fundamental_weight(g, k));
      for (const Eigen::MatrixXi& S : refl)
        for (const Eigen::VectorXi& v : o.elements)
          CHECK(o.contains(S * v));
      RatVec sum = RatVec::Zero(g.rank);
      for (const Eigen::VectorXi& v : o.elements)
        sum += to_e_coords(Weight(g, v));
      CHECK(sum.isZero());
    }
  }
}

TEST_CASE("half orbits") {
  GroupType b3(Family::B, 3);
  Orbit h = half_orbit_plus(b3, 1);
  REQUIRE(h.size() == 3);  // {e_1, e_2, e_3}
  for (const Eigen::VectorXi& v : h.elements) {
    RatVec e = to_e_coords(Weight(b3, v));
    int nonzero = 0;
    for (int j = 0; j < 3; ++j)
      if (e(j) != 0) {
        ++nonzero;
        CHECK(e(j) == 1);
      }
    CHECK(nonzero == 1);
  }

  GroupType d4(Family::D, 4);
  Orbit spin_half = half_orbit_plus(d4, 4);
  CHECK(spin_half.size() == 4);
  for (const Eigen::VectorXi& v : spin_half.elements)
    CHECK(to_e_coords(Weight(d4, v))(0) == make_rat(1, 2));

  // W_+ and -W_+ partition the orbit
  for (GroupType g : {GroupType(Family::B, 4), GroupType(Family::D, 6)}) {
    int small_max = g.family == Family::B ? g.rank - 1 : g.rank - 2;
    for (int k = 1; k <= small_max; ++k) {
      Orbit full = orbit(g, fundamental_weight(g, k));
      Orbit half = half_orbit_plus(g, k);
      CHECK(2 * half.size() == full.size());
      for (const Eigen::VectorXi& v : half.elements) {
        CHECK(full.contains(v));
        Eigen::VectorXi neg = -v;
        CHECK(full.contains(neg));
        CHECK_FALSE(half.contains(neg));
      }
    }
  }

  // spin half-orbits are undefined for odd n
  GroupType d5(Family::D, 5);
  CHECK_THROWS_AS(half_orbit_plus(d5, 5), std::domain_error);
  CHECK_THROWS_AS(half_orbit_plus(d5, 4), std::domain_error);
  CHECK_THROWS_AS(half_orbit_plus(b3, 3), std::out_of_range);
}

TEST_CASE("opposite spin orbits for odd n") {
  GroupType d5(Family::D, 5);
  CHECK(orbit_negation_check(d5));
  CHECK_THROWS_AS(orbit_negation_check(GroupType(Family::D, 4)),
                  std::invalid_argument);
}
