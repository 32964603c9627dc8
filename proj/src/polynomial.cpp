#include "spinexp/polynomial.hpp"

namespace spinexp {

PolyQ to_rational(const PolyZ& p) {
  std::map<Monomial, Rat> acc;
  for (const auto& [m, c] : p.terms()) acc.emplace(m, Rat(c));
  return PolyQ::from_map(p.basis(), p.nvars(), acc);
}

PolyZ to_integer_checked(const PolyQ& p) {
  std::map<Monomial, Int> acc;
  for (const auto& [m, c] : p.terms()) {
    if (!is_integer(c))
      throw std::domain_error("to_integer_checked: non-integer coefficient " +
                              to_string(c));
    acc.emplace(m, c.get_num());
  }
  return PolyZ::from_map(p.basis(), p.nvars(), acc);
}

namespace {

void collect_monomials(int nvars, int d, int j, Monomial& current,
                       std::vector<Monomial>& out) {
  if (j == nvars - 1) {
    current.set_exp(j, d);
    out.push_back(current);
    current.set_exp(j, 0);
    return;
  }
  for (int e = d; e >= 0; --e) {
    current.set_exp(j, e);
    collect_monomials(nvars, d - e, j + 1, current, out);
    current.set_exp(j, 0);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(nvars);
  collect_monomials(nvars, d, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

PolyQ q_power_sum(const GroupType& g, int i) {
  if (i < 1 || i > g.rank)
    throw std::out_of_range("q_power_sum: i outside 1..n");
  PolyQ p(VarBasis::E, g.rank);
  std::map<Monomial, Rat> acc;
  for (int j = 0; j < g.rank; ++j)
    acc.emplace(Monomial::variable(g.rank, j, 2 * i), Rat(1));
  return PolyQ::from_map(VarBasis::E, g.rank, acc);
}

PolyQ q_prime(const GroupType& g) {
  if (g.family != Family::D)
    throw std::domain_error("q_prime: defined for family D only");
  Monomial m(g.rank);
  for (int j = 0; j < g.rank; ++j) m.set_exp(j, 1);
  return PolyQ::monomial(VarBasis::E, m, Rat(1));
}

PolyQ p_elem(int n, int i) {
  if (n < 1 || n > kMaxVars) throw std::out_of_range("p_elem: bad n");
  if (i < 0 || i > n) throw std::out_of_range("p_elem: i outside 0..n");
  std::map<Monomial, Rat> acc;
  // Enumerate i-subsets of {0..n-1}.
  std::vector<int> idx(i);
  for (int t = 0; t < i; ++t) idx[t] = t;
  for (;;) {
    Monomial m(n);
    for (int t = 0; t < i; ++t) m.set_exp(idx[t], 2);
    acc.emplace(m, Rat(1));
    int t = i - 1;
    while (t >= 0 && idx[t] == n - i + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int u = t + 1; u < i; ++u) idx[u] = idx[u - 1] + 1;
  }
  return PolyQ::from_map(VarBasis::E, n, acc);
}

}  // namespace spinexp
