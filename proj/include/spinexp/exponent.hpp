// Brute-force exponent oracle: the degree-i W-invariant ideal slice and the
// degree-i image of the invariant augmentation ideal under the truncated
// characteristic map, both as Z-submodules of S^i(Lambda) in the
// omega-monomial basis, and the exponent of their quotient.
#pragma once

#include "spinexp/groupring.hpp"
#include "spinexp/normal_form.hpp"

#include <map>
#include <vector>

namespace spinexp {

struct ModuleBasis {
  GroupType group;
  int degree = 0;
  std::vector<Monomial> ambient;  // omega-monomials of the given degree
  IntMat basis;                   // HNF rows in ambient coordinates

  Eigen::Index rank() const { return basis.rows(); }
};

/// Z-basis of the degree-j W-invariants of S(Lambda), computed as the
/// integer kernel of the stacked maps (R_s - I) on the monomial basis.
ModuleBasis invariant_module(const GroupType& g, int j);

/// Degree-i slice of the ideal generated by all positive-degree
/// invariants: spans of monomial * invariant-basis products.
ModuleBasis ich_w_module(const GroupType& g, int i);

struct PhiGrid {
  int mu_box = 0;     // L1 bound on the omega coordinates of the shift mu
  int rep_bound = 0;  // bound on the coordinate sum of dominant generators

  bool operator==(const PhiGrid&) const = default;
};

/// Shared scratch across grid steps of one tau run (orbit phi-images are
/// grid-independent and re-usable).
struct PhiImageCache {
  std::map<Eigen::VectorXi, std::vector<PolyZ>, LexLess> by_lambda;
};

/// Z-span of phi^(i)(e^mu (rho(lambda) - |W(lambda)| e^0)) over the grid:
/// mu in the L1 ball, lambda dominant nonzero with coordinate sum within
/// the bound. Vectors live in the omega-monomial basis and are integral.
ModuleBasis phi_ikw_module(const GroupType& g, int i, const PhiGrid& grid,
                           PhiImageCache* cache = nullptr);

struct TauStep {
  PhiGrid grid;
  Eigen::Index phi_rank = 0;
  bool changed = true;  // against the previous step
};

struct TauResult {
  GroupType group;
  int i = 0;
  bool stabilized = false;
  bool finite = false;
  Int tau;  // valid when stabilized && finite
  std::vector<Int> divisors;
  std::vector<TauStep> trace;
  PhiGrid final_grid;
  double millis = 0.0;
};

/// Grids i, i+1, i+2, i+3 on both parameters.
std::vector<PhiGrid> default_grid_schedule(int i);

/// Runs the grid schedule until the phi-image module is unchanged under
/// two successive enlargements, then reports the exponent of
/// (ich + phi-image) / phi-image. Growth monotonicity is asserted at every
/// step, and tau * g is re-verified by a direct solve for every ich
/// generator g.
TauResult tau_exponent(const GroupType& g, int i,
                       std::vector<PhiGrid> schedule = {});

/// All lattice points with |omega|_1 <= bound, ordered by norm then lex.
std::vector<Eigen::VectorXi> l1_ball(int rank, int bound);

/// Nonzero dominant weights with coordinate sum <= bound, ordered by sum
/// then lex.
std::vector<Eigen::VectorXi> dominant_box(int rank, int bound);

}  // namespace spinexp
