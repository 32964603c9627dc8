#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinexp/groupring.hpp"

#include <algorithm>
#include <random>

using namespace spinexp;

namespace {

Weight random_weight(std::mt19937_64& rng, const GroupType& g, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  Eigen::VectorXi a(g.rank);
  for (int j = 0; j < g.rank; ++j) a(j) = coord(rng);
  return Weight(g, a);
}

}  // namespace

TEST_CASE("orbit sums and augmentation") {
  GroupType b3(Family::B, 3);
  GroupRingElement r1 = rho(b3, fundamental_weight(b3, 1));
  CHECK(r1.support_size() == 6);
  for (const auto& [w, c] : r1.terms()) CHECK(c == 1);
  CHECK(augmentation(r1) == 6);

  CHECK(rho(b3, zero_weight(b3)) == GroupRingElement::unit(b3));

  for (const GroupRingElement& gen : ikw_generators(b3))
    CHECK(augmentation(gen) == 0);

  // optional dominant-weight grid appends generators, zero weight skipped
  Eigen::VectorXi two(3);
  two << 2, 0, 1;
  std::vector<Weight> extra{Weight(b3, two), zero_weight(b3)};
  std::vector<GroupRingElement> with_grid = ikw_generators(b3, extra);
  CHECK(with_grid.size() == 4);
  for (const GroupRingElement& gen : with_grid)
    CHECK(augmentation(gen) == 0);
}

TEST_CASE("group ring multiplication is exponent-additive") {
  GroupType b3(Family::B, 3);
  std::mt19937_64 rng(53);
  Weight a = random_weight(rng, b3, 3);
  Weight b = random_weight(rng, b3, 3);
  GroupRingElement ea = GroupRingElement::exponential(a);
  GroupRingElement eb = GroupRingElement::exponential(b);
  CHECK(ea * eb == GroupRingElement::exponential(a + b));

  GroupRingElement sum = ea + eb;
  CHECK(augmentation(sum * sum) == 4);
}

TEST_CASE("phi at degrees 0 and 1") {
  GroupType d4(Family::D, 4);
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    Weight w = random_weight(rng, d4, 3);
    GroupRingElement e = GroupRingElement::exponential(w);
    PolyQ deg0 = phi(d4, 0, e);
    CHECK(deg0 == PolyQ::constant(VarBasis::E, 4, Rat(1)));
    // degree-1 image is the weight itself as a linear form
    PolyQ deg1 = phi(d4, 1, e);
    RatVec ecoords = to_e_coords(w);
    PolyQ expected(VarBasis::E, 4);
    std::map<Monomial, Rat> acc;
    for (int j = 0; j < 4; ++j)
      if (ecoords(j) != 0)
        acc.emplace(Monomial::variable(4, j, 1), ecoords(j));
    expected = PolyQ::from_map(VarBasis::E, 4, acc);
    CHECK(deg1 == expected);
  }
}

TEST_CASE("phi^2 of the vector orbit sum is the quadratic invariant") {
  for (GroupType g : {GroupType(Family::B, 3), GroupType(Family::B, 4),
                      GroupType(Family::B, 5), GroupType(Family::D, 4),
                      GroupType(Family::D, 5)}) {
    PolyQ image = phi(g, 2, rho(g, fundamental_weight(g, 1)));
    CHECK(image == q_power_sum(g, 1));
  }
}

TEST_CASE("phi is multiplicative on truncations") {
  std::mt19937_64 rng(61);
  for (GroupType g : {GroupType(Family::B, 3), GroupType(Family::B, 4),
                      GroupType(Family::D, 4)}) {
    for (int i = 1; i <= 5; ++i) {
      for (int t = 0; t < 10; ++t) {
        Weight a = random_weight(rng, g, 3);
        Weight b = random_weight(rng, g, 3);
        PolyZ ta = phi_omega_truncated(g, a.omega, i);
        PolyZ tb = phi_omega_truncated(g, b.omega, i);
        PolyZ product = mul(ta, tb, i).homogeneous_component(i);
        PolyZ direct = phi_omega(
            g, i, GroupRingElement::exponential(a + b));
        CHECK(product == direct);
      }
    }
  }
}

TEST_CASE("partition expansion tables") {
  PartitionExpansion e2 = partition_expansion(2);
  REQUIRE(e2.coeff.size() == 2);
  CHECK(e2.coeff.at({1, 1}) == 1);
  CHECK(e2.coeff.at({2}) == 1);

  PartitionExpansion e3 = partition_expansion(3);
  REQUIRE(e3.coeff.size() == 3);
  CHECK(e3.coeff.at({1, 1, 1}) == 1);
  CHECK(e3.coeff.at({2, 1}) == 3);
  CHECK(e3.coeff.at({3}) == 2);

  // class equation: sum of i!/z_mu over partitions equals i!
  for (int i = 1; i <= 6; ++i) {
    PartitionExpansion e = partition_expansion(i);
    Int total = 0;
    for (const auto& [mu, c] : e.coeff) total += c;
    CHECK(total == factorial(static_cast<unsigned long>(i)));
  }
}

TEST_CASE("partition coefficients count permutations by cycle type") {
  for (int i = 2; i <= 5; ++i) {
    PartitionExpansion e = partition_expansion(i);
    std::map<std::vector<int>, Int> census;
    std::vector<int> perm(static_cast<std::size_t>(i));
    for (int j = 0; j < i; ++j) perm[static_cast<std::size_t>(j)] = j;
    do {
      // cycle type of perm
      std::vector<bool> seen(static_cast<std::size_t>(i), false);
      std::vector<int> type;
      for (int j = 0; j < i; ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        int len = 0, cur = j;
        while (!seen[static_cast<std::size_t>(cur)]) {
          seen[static_cast<std::size_t>(cur)] = true;
          cur = perm[static_cast<std::size_t>(cur)];
          ++len;
        }
        type.push_back(len);
      }
      std::sort(type.rbegin(), type.rend());
      census[type] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(census == e.coeff);
  }
}

TEST_CASE("phi equals the partition-expansion route") {
  std::mt19937_64 rng(67);
  for (GroupType g : {GroupType(Family::B, 3), GroupType(Family::B, 4),
                      GroupType(Family::D, 4)}) {
    for (int i = 1; i <= 5; ++i)
      for (int t = 0; t < 12; ++t) {
        Weight w = random_weight(rng, g, 3);
        PolyQ direct = phi(g, i, GroupRingElement::exponential(w));
        PolyQ viaparts = phi_via_partitions(g, i, w);
        CHECK(direct == viaparts);
      }
  }
}

TEST_CASE("orbit-sum images are invariant in degree two only") {
  // The degree-2 image of an orbit sum is a symmetric invariant. In
  // higher degrees the individual images are NOT invariant (exact
  // expansion shows it); only the verified combinations are, because the
  // non-invariant parts cancel there.
  std::mt19937_64 rng(71);
  for (GroupType g : {GroupType(Family::B, 3), GroupType(Family::B, 4),
                      GroupType(Family::D, 4), GroupType(Family::D, 5)}) {
    const int n = g.rank;
    for (int k = 1; k <= n; ++k) {
      PolyQ image = phi(g, 2, rho(g, fundamental_weight(g, k)));
      for (int t = 0; t < 5; ++t) {
        Eigen::VectorXi perm(n), signs(n);
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = j;
        std::shuffle(p.begin(), p.end(), rng);
        int minus = 0;
        for (int j = 0; j < n; ++j) {
          perm(j) = p[static_cast<std::size_t>(j)];
          signs(j) = rng() % 2 ? 1 : -1;
          if (signs(j) < 0) ++minus;
        }
        if (g.family == Family::D && minus % 2 != 0) {
          signs(0) = -signs(0);  // restore even parity
        }
        CHECK(apply_signed_permutation(image, perm, signs) == image);
      }
    }
  }

  // pin the degree-3 counterexample: a plain transposition moves the image
  GroupType b3(Family::B, 3);
  PolyQ img3 = phi(b3, 3, rho(b3, fundamental_weight(b3, 1)));
  Eigen::VectorXi perm(3), signs(3);
  perm << 1, 0, 2;
  signs << 1, 1, 1;
  CHECK(apply_signed_permutation(img3, perm, signs) != img3);
}

TEST_CASE("basis conversions round-trip") {
  GroupType b4(Family::B, 4);
  PolyQ q2 = q_power_sum(b4, 1);
  PolyZ in_omega = e_to_omega_integral(b4, q2);
  CHECK(omega_to_e(b4, in_omega) == q2);

  GroupType d5(Family::D, 5);
  PolyQ q4 = q_power_sum(d5, 2);
  CHECK(omega_to_e(d5, e_to_omega_integral(d5, q4)) == q4);

  // a polynomial with non-lattice coefficients is rejected
  PolyQ half = PolyQ::monomial(VarBasis::E, Monomial::variable(4, 0, 1),
                               make_rat(1, 3));
  CHECK_THROWS_AS(e_to_omega_integral(b4, half), std::domain_error);
}
