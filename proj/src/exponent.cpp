#include "spinexp/exponent.hpp"

#include <algorithm>
#include <chrono>

namespace spinexp {

namespace {

std::map<Monomial, int> index_of(const std::vector<Monomial>& ambient) {
  std::map<Monomial, int> idx;
  for (std::size_t t = 0; t < ambient.size(); ++t)
    idx.emplace(ambient[t], static_cast<int>(t));
  return idx;
}

IntVec to_coords(const PolyZ& p, const std::map<Monomial, int>& idx,
                 Eigen::Index dim) {
  IntVec v = IntVec::Zero(dim);
  for (const auto& [m, c] : p.terms()) {
    auto it = idx.find(m);
    if (it == idx.end())
      throw std::logic_error("to_coords: monomial outside the ambient basis");
    v(it->second) = c;
  }
  return v;
}

PolyZ from_coords(const GroupType& g, const std::vector<Monomial>& ambient,
                  const IntVec& v) {
  std::map<Monomial, Int> acc;
  for (Eigen::Index t = 0; t < v.size(); ++t)
    if (v(t) != 0) acc.emplace(ambient[static_cast<std::size_t>(t)], v(t));
  return PolyZ::from_map(VarBasis::Omega, g.rank, acc);
}

// omega_k |-> sum_l R(l,k) omega_l for one reflection matrix R.
std::vector<PolyZ> variable_images(const GroupType& g,
                                   const Eigen::MatrixXi& R) {
  std::vector<PolyZ> images;
  images.reserve(static_cast<std::size_t>(g.rank));
  for (int k = 0; k < g.rank; ++k) {
    std::map<Monomial, Int> acc;
    for (int l = 0; l < g.rank; ++l)
      if (R(l, k) != 0)
        acc.emplace(Monomial::variable(g.rank, l, 1), Int(R(l, k)));
    images.push_back(PolyZ::from_map(VarBasis::Omega, g.rank, acc));
  }
  return images;
}

}  // namespace

ModuleBasis invariant_module(const GroupType& g, int j) {
  if (j < 1) throw std::invalid_argument("invariant_module: j >= 1");
  std::vector<Monomial> ambient = monomials_of_degree(g.rank, j);
  const Eigen::Index dim = static_cast<Eigen::Index>(ambient.size());
  std::map<Monomial, int> idx = index_of(ambient);

  std::vector<Eigen::MatrixXi> refl = simple_reflection_matrices(g);
  IntMat stacked = IntMat::Zero(dim * static_cast<Eigen::Index>(refl.size()),
                                dim);
  for (std::size_t s = 0; s < refl.size(); ++s) {
    std::vector<PolyZ> images = variable_images(g, refl[s]);
    for (Eigen::Index col = 0; col < dim; ++col) {
      PolyZ mono = PolyZ::monomial(
          VarBasis::Omega, ambient[static_cast<std::size_t>(col)], 1);
      PolyZ image = substitute_linear(mono, images);
      IntVec coords = to_coords(image, idx, dim);
      coords(col) -= 1;  // action minus identity
      for (Eigen::Index row = 0; row < dim; ++row)
        stacked(static_cast<Eigen::Index>(s) * dim + row, col) = coords(row);
    }
  }

  // v with stacked * v = 0  <=>  v in the kernel of every (R_s - I).
  IntMat kernel = left_kernel(stacked.transpose());
  ModuleBasis out{g, j, std::move(ambient), hnf_basis(kernel)};
  return out;
}

ModuleBasis ich_w_module(const GroupType& g, int i) {
  if (i < 1) throw std::invalid_argument("ich_w_module: i >= 1");
  std::vector<Monomial> ambient = monomials_of_degree(g.rank, i);
  const Eigen::Index dim = static_cast<Eigen::Index>(ambient.size());
  std::map<Monomial, int> idx = index_of(ambient);

  LatticeSpan span(dim);
  for (int j = 1; j <= i; ++j) {
    ModuleBasis inv = invariant_module(g, j);
    if (inv.rank() == 0) continue;
    std::vector<Monomial> shifts = monomials_of_degree(g.rank, i - j);
    for (Eigen::Index r = 0; r < inv.rank(); ++r) {
      PolyZ f = from_coords(g, inv.ambient, inv.basis.row(r).transpose());
      for (const Monomial& m : shifts) {
        PolyZ shifted = f * PolyZ::monomial(VarBasis::Omega, m, 1);
        span.insert(to_coords(shifted, idx, dim));
      }
    }
  }
  return ModuleBasis{g, i, std::move(ambient), span.basis()};
}

std::vector<Eigen::VectorXi> l1_ball(int rank, int bound) {
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi v = Eigen::VectorXi::Zero(rank);
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == rank) {
      out.push_back(v);
      return;
    }
    for (int x = -remaining; x <= remaining; ++x) {
      v(j) = x;
      self(self, j + 1, remaining - std::abs(x));
    }
    v(j) = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int na = a.cwiseAbs().sum(), nb = b.cwiseAbs().sum();
    if (na != nb) return na < nb;
    return LexLess{}(a, b);
  });
  return out;
}

std::vector<Eigen::VectorXi> dominant_box(int rank, int bound) {
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi v = Eigen::VectorXi::Zero(rank);
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == rank) {
      if (!v.isZero()) out.push_back(v);
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      v(j) = x;
      self(self, j + 1, remaining - x);
    }
    v(j) = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int na = a.sum(), nb = b.sum();
    if (na != nb) return na < nb;
    return LexLess{}(a, b);
  });
  return out;
}

ModuleBasis phi_ikw_module(const GroupType& g, int i, const PhiGrid& grid,
                           PhiImageCache* cache) {
  if (i < 2) throw std::invalid_argument("phi_ikw_module: i >= 2");
  if (grid.mu_box < i || grid.rep_bound < i)
    throw std::invalid_argument("phi_ikw_module: grid bounds must be >= i");
  const int n = g.rank;

  std::vector<Monomial> ambient = monomials_of_degree(n, i);
  const Eigen::Index dim = static_cast<Eigen::Index>(ambient.size());
  std::map<Monomial, int> idx = index_of(ambient);

  // Ambient bases of the truncation components.
  std::vector<std::vector<Monomial>> by_degree;
  std::vector<std::map<Monomial, int>> by_degree_idx;
  std::vector<Eigen::Index> offset_u(static_cast<std::size_t>(i) + 1, 0);
  std::vector<Eigen::Index> offset_t(static_cast<std::size_t>(i) + 1, 0);
  for (int d = 0; d <= i; ++d) {
    by_degree.push_back(monomials_of_degree(n, d));
    by_degree_idx.push_back(index_of(by_degree.back()));
  }
  Eigen::Index dim_u = 0, dim_t = 0;
  for (int d = 0; d <= i - 1; ++d) {
    offset_u[static_cast<std::size_t>(d)] = dim_u;
    dim_u += static_cast<Eigen::Index>(by_degree[static_cast<std::size_t>(d)]
                                           .size());
  }
  for (int d = 1; d <= i; ++d) {
    offset_t[static_cast<std::size_t>(d)] = dim_t;
    dim_t += static_cast<Eigen::Index>(by_degree[static_cast<std::size_t>(d)]
                                           .size());
  }

  // Shift side: representatives of the Z-span of the truncations of
  // phi(e^mu) through degree i-1. The final module is bilinear in the
  // (shift, generator) truncation data, so span representatives suffice.
  LatticeSpan u_span(dim_u);
  std::vector<std::vector<PolyZ>> u_reps;  // components by degree 0..i-1
  for (const Eigen::VectorXi& mu : l1_ball(n, grid.mu_box)) {
    PolyZ trunc = phi_omega_truncated(g, mu, i - 1);
    IntVec u = IntVec::Zero(dim_u);
    std::vector<PolyZ> comps;
    comps.reserve(static_cast<std::size_t>(i));
    for (int d = 0; d <= i - 1; ++d) {
      PolyZ comp = trunc.homogeneous_component(d);
      comps.push_back(comp);
      for (const auto& [m, c] : comp.terms())
        u(offset_u[static_cast<std::size_t>(d)] +
          by_degree_idx[static_cast<std::size_t>(d)].at(m)) = c;
    }
    if (u_span.insert(u)) u_reps.push_back(std::move(comps));
  }

  // Generator side: rho(lambda) - |W(lambda)| has zero augmentation, so
  // only degrees 1..i of its truncated image matter.
  LatticeSpan t_span(dim_t);
  std::vector<std::vector<PolyZ>> t_reps;  // components by degree 1..i
  for (const Eigen::VectorXi& lam : dominant_box(n, grid.rep_bound)) {
    std::vector<PolyZ> comps;
    if (cache) {
      auto it = cache->by_lambda.find(lam);
      if (it != cache->by_lambda.end()) comps = it->second;
    }
    if (comps.empty()) {
      Orbit orb = orbit(g, Weight(g, lam));
      PolyAccumulator<Int> acc(VarBasis::Omega, n);
      for (const Eigen::VectorXi& v : orb.elements)
        acc.add(phi_omega_truncated(g, v, i));
      PolyZ total = acc.take();
      comps.reserve(static_cast<std::size_t>(i));
      for (int d = 1; d <= i; ++d)
        comps.push_back(total.homogeneous_component(d));
      if (cache) cache->by_lambda.emplace(lam, comps);
    }
    IntVec t = IntVec::Zero(dim_t);
    for (int d = 1; d <= i; ++d)
      for (const auto& [m, c] :
           comps[static_cast<std::size_t>(d - 1)].terms())
        t(offset_t[static_cast<std::size_t>(d)] +
          by_degree_idx[static_cast<std::size_t>(d)].at(m)) = c;
    if (t_span.insert(t)) t_reps.push_back(std::move(comps));
  }

  // phi^(i)(e^mu g) = sum_{b=1..i} phi^(i-b)(e^mu) * [phi(g)]_b.
  LatticeSpan module(dim);
  for (const std::vector<PolyZ>& u : u_reps)
    for (const std::vector<PolyZ>& t : t_reps) {
      PolyAccumulator<Int> acc(VarBasis::Omega, n);
      for (int b = 1; b <= i; ++b)
        acc.add(mul(u[static_cast<std::size_t>(i - b)],
                    t[static_cast<std::size_t>(b - 1)]));
      module.insert(to_coords(acc.take(), idx, dim));
    }

  return ModuleBasis{g, i, std::move(ambient), module.basis()};
}

std::vector<PhiGrid> default_grid_schedule(int i) {
  std::vector<PhiGrid> out;
  for (int s = 0; s <= 3; ++s) out.push_back({i + s, i + s});
  return out;
}

TauResult tau_exponent(const GroupType& g, int i,
                       std::vector<PhiGrid> schedule) {
  auto start = std::chrono::steady_clock::now();
  if (schedule.empty()) schedule = default_grid_schedule(i);

  TauResult result{g, i, false, false, Int(0), {}, {}, PhiGrid{}, 0.0};

  ModuleBasis ich = ich_w_module(g, i);
  PhiImageCache cache;

  ModuleBasis phi_mod{g, i, {}, IntMat(0, 0)};
  bool have_prev = false;
  int equal_streak = 0;
  for (const PhiGrid& grid : schedule) {
    ModuleBasis next = phi_ikw_module(g, i, grid, &cache);
    if (have_prev) {
      LatticeSpan check(next.basis.cols());
      for (Eigen::Index r = 0; r < next.basis.rows(); ++r)
        check.insert(next.basis.row(r).transpose());
      if (!check.contains_all(phi_mod.basis))
        throw std::logic_error("tau_exponent: module shrank under a larger "
                               "grid");
    }
    bool changed = !have_prev || !(next.basis == phi_mod.basis);
    result.trace.push_back({grid, next.rank(), changed});
    result.final_grid = grid;
    phi_mod = std::move(next);
    have_prev = true;
    equal_streak = changed ? 0 : equal_streak + 1;
    if (equal_streak >= 2) {
      result.stabilized = true;
      break;
    }
  }

  if (result.stabilized) {
    ModuleExponent me = module_exponent(ich.basis, phi_mod.basis);
    result.finite = me.finite;
    if (me.finite) {
      result.tau = me.value;
      result.divisors = me.divisors;
      // Direct re-verification: tau * generator must solve in the span.
      for (Eigen::Index r = 0; r < ich.basis.rows(); ++r) {
        IntVec scaled = ich.basis.row(r).transpose() * result.tau;
        if (!solve_in_rowspan(phi_mod.basis, scaled))
          throw std::logic_error("tau_exponent: exponent failed the direct "
                                 "membership check");
      }
    }
  }

  auto elapsed = std::chrono::steady_clock::now() - start;
  result.millis =
      std::chrono::duration<double, std::milli>(elapsed).count();
  return result;
}

}  // namespace spinexp
