#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinexp/lattice.hpp"

#include <random>
#include <set>
#include <vector>

using namespace spinexp;

namespace {

RatVec rat_vec(std::initializer_list<Rat> vals) {
  RatVec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index j = 0;
  for (const Rat& r : vals) v(j++) = r;
  return v;
}

Eigen::VectorXi int_vec(std::initializer_list<int> vals) {
  Eigen::VectorXi v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index j = 0;
  for (int x : vals) v(j++) = x;
  return v;
}

const Rat kHalf = make_rat(1, 2);

}  // namespace

TEST_CASE("rank validation") {
  CHECK_THROWS_AS(GroupType(Family::B, 2), std::invalid_argument);
  CHECK_THROWS_AS(GroupType(Family::D, 3), std::invalid_argument);
  CHECK_NOTHROW(GroupType(Family::B, 3));
  CHECK_NOTHROW(GroupType(Family::D, 4));
}

TEST_CASE("fundamental weight e-coordinates match the displayed tables") {
  GroupType b3(Family::B, 3);
  CHECK(to_e_coords(fundamental_weight(b3, 3)) ==
        rat_vec({kHalf, kHalf, kHalf}));

  GroupType d4(Family::D, 4);
  CHECK(to_e_coords(fundamental_weight(d4, 3)) ==
        rat_vec({kHalf, kHalf, kHalf, -kHalf}));

  GroupType b5(Family::B, 5);
  CHECK(to_e_coords(fundamental_weight(b5, 1)) ==
        rat_vec({1, 0, 0, 0, 0}));

  CHECK_THROWS_AS(fundamental_weight(b3, 0), std::out_of_range);
  CHECK_THROWS_AS(fundamental_weight(b3, 4), std::out_of_range);
}

TEST_CASE("omega to e coordinate change") {
  GroupType b3(Family::B, 3);
  CHECK(to_e_coords(zero_weight(b3)) == rat_vec({0, 0, 0}));
  CHECK(to_e_coords(Weight(b3, int_vec({0, 1, 0}))) == rat_vec({1, 1, 0}));

  GroupType d4(Family::D, 4);
  // omega_3 + omega_4 = (1, 1, 1, 0)
  CHECK(to_e_coords(Weight(d4, int_vec({0, 0, 1, 1}))) ==
        rat_vec({1, 1, 1, 0}));
}

TEST_CASE("from_e_coords: round trip, additivity, rejection") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (GroupType g : {GroupType(Family::B, 3), GroupType(Family::B, 5),
                      GroupType(Family::D, 4), GroupType(Family::D, 5)}) {
    for (int t = 0; t < 50; ++t) {
      Eigen::VectorXi a(g.rank), b(g.rank);
      for (int j = 0; j < g.rank; ++j) {
        a(j) = coord(rng);
        b(j) = coord(rng);
      }
      Weight wa(g, a), wb(g, b);
      CHECK(from_e_coords(g, to_e_coords(wa)) == wa);
      RatVec sum = to_e_coords(wa) + to_e_coords(wb);
      CHECK(to_e_coords(wa + wb) == sum);
    }
  }

  GroupType b3(Family::B, 3);
  // e_1/3 is not a lattice point; the error names a coordinate
  CHECK_THROWS_WITH_AS(from_e_coords(b3, rat_vec({make_rat(1, 3), 0, 0})),
                       doctest::Contains("omega coordinate"),
                       std::domain_error);
}

TEST_CASE("simple reflections are integral involutions") {
  for (GroupType g : {GroupType(Family::B, 3), GroupType(Family::B, 4),
                      GroupType(Family::D, 4), GroupType(Family::D, 5)}) {
    std::vector<Eigen::MatrixXi> refl = simple_reflection_matrices(g);
    REQUIRE(static_cast<int>(refl.size()) == g.rank);
    for (const Eigen::MatrixXi& S : refl) {
      CHECK(S * S == Eigen::MatrixXi::Identity(g.rank, g.rank));
    }
  }
}

namespace {

// Order of the matrix group generated by the reflections, by closure.
std::size_t generated_group_order(const GroupType& g) {
  std::vector<Eigen::MatrixXi> gens = simple_reflection_matrices(g);
  auto key = [&](const Eigen::MatrixXi& M) {
    std::vector<int> k;
    for (int r = 0; r < M.rows(); ++r)
      for (int c = 0; c < M.cols(); ++c) k.push_back(M(r, c));
    return k;
  };
  std::set<std::vector<int>> seen;
  std::vector<Eigen::MatrixXi> queue{
      Eigen::MatrixXi::Identity(g.rank, g.rank)};
  seen.insert(key(queue[0]));
  while (!queue.empty()) {
    Eigen::MatrixXi M = queue.back();
    queue.pop_back();
    for (const Eigen::MatrixXi& S : gens) {
      Eigen::MatrixXi N = S * M;
      if (seen.insert(key(N)).second) queue.push_back(N);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("generated reflection group has the Weyl group order") {
  for (GroupType g : {GroupType(Family::B, 3), GroupType(Family::B, 4),
                      GroupType(Family::B, 5), GroupType(Family::D, 4),
                      GroupType(Family::D, 5)}) {
    CHECK(Int(static_cast<long>(generated_group_order(g))) ==
          weyl_group_order(g));
  }
}

TEST_CASE("standard basis weights have integral omega coordinates") {
  for (GroupType g : {GroupType(Family::B, 4), GroupType(Family::D, 5)}) {
    std::vector<Weight> basis = standard_basis_weights(g);
    REQUIRE(static_cast<int>(basis.size()) == g.rank);
    for (int j = 0; j < g.rank; ++j) {
      RatVec e = to_e_coords(basis[static_cast<std::size_t>(j)]);
      for (int c = 0; c < g.rank; ++c) CHECK(e(c) == (c == j ? 1 : 0));
    }
  }
}
