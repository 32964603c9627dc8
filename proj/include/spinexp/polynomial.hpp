// Sparse multivariate polynomials over exact scalars, tagged by variable
// basis (e_1..e_n or omega_1..omega_n) so cross-basis arithmetic cannot
// happen by accident. Terms are kept sorted in graded-lex order with no
// zero coefficients.
#pragma once

#include "spinexp/lattice.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinexp {

inline constexpr int kMaxVars = 8;

enum class VarBasis : std::uint8_t { E, Omega };

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : nvars_(check_nvars(nvars)) {}

  static Monomial variable(int nvars, int j, int e = 1) {
    Monomial m(nvars);
    m.set_exp(j, e);
    return m;
  }

  int nvars() const { return nvars_; }
  int exp(int j) const { return exps_[static_cast<std::size_t>(j)]; }

  void set_exp(int j, int e) {
    if (j < 0 || j >= nvars_) throw std::out_of_range("Monomial: bad index");
    if (e < 0 || e > 255) throw std::out_of_range("Monomial: bad exponent");
    deg_ += e - exps_[static_cast<std::size_t>(j)];
    exps_[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(e);
  }

  int degree() const { return deg_; }

  Monomial times(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Monomial: nvars");
    Monomial r(nvars_);
    for (int j = 0; j < nvars_; ++j) r.set_exp(j, exp(j) + o.exp(j));
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.deg_ == b.deg_ && a.exps_ == b.exps_;
  }

  // Graded lex: degree first, then exponents with e_1 most significant.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ <=> b.nvars_;
    if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
    for (int j = 0; j < a.nvars_; ++j)
      if (a.exps_[static_cast<std::size_t>(j)] !=
          b.exps_[static_cast<std::size_t>(j)])
        return a.exps_[static_cast<std::size_t>(j)] <=>
               b.exps_[static_cast<std::size_t>(j)];
    return std::strong_ordering::equal;
  }

 private:
  static int check_nvars(int n) {
    if (n < 0 || n > kMaxVars)
      throw std::out_of_range("Monomial: nvars outside 0..8");
    return n;
  }

  std::array<std::uint8_t, kMaxVars> exps_{};
  std::int16_t deg_ = 0;
  std::int8_t nvars_ = 0;
};

template <typename Coeff>
class Polynomial {
 public:
  using Term = std::pair<Monomial, Coeff>;

  Polynomial() = default;
  Polynomial(VarBasis basis, int nvars) : basis_(basis), nvars_(nvars) {}

  static Polynomial zero(VarBasis basis, int nvars) {
    return Polynomial(basis, nvars);
  }

  static Polynomial constant(VarBasis basis, int nvars, Coeff c) {
    Polynomial p(basis, nvars);
    if (c != 0) p.terms_.emplace_back(Monomial(nvars), std::move(c));
    return p;
  }

  static Polynomial monomial(VarBasis basis, Monomial m, Coeff c) {
    Polynomial p(basis, m.nvars());
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }

  static Polynomial from_map(VarBasis basis, int nvars,
                             const std::map<Monomial, Coeff>& acc) {
    Polynomial p(basis, nvars);
    p.terms_.reserve(acc.size());
    for (const auto& [m, c] : acc)
      if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }

  VarBasis basis() const { return basis_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int degree() const {
    return terms_.empty() ? -1 : terms_.back().first.degree();
  }

  bool is_homogeneous(int d) const {
    for (const Term& t : terms_)
      if (t.first.degree() != d) return false;
    return true;
  }

  Coeff coeff(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Coeff(0);
  }

  Polynomial& operator+=(const Polynomial& o) {
    *this = *this + o;
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    *this = *this - o;
    return *this;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merged(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merged(a, b, true);
  }

  Polynomial operator-() const {
    Polynomial r(basis_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.emplace_back(t.first, -t.second);
    return r;
  }

  Polynomial scaled(const Coeff& c) const {
    Polynomial r(basis_, nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
    return r;
  }

  Polynomial truncated(int max_deg) const {
    Polynomial r(basis_, nvars_);
    for (const Term& t : terms_)
      if (t.first.degree() <= max_deg) r.terms_.push_back(t);
    return r;
  }

  Polynomial homogeneous_component(int d) const {
    Polynomial r(basis_, nvars_);
    for (const Term& t : terms_)
      if (t.first.degree() == d) r.terms_.push_back(t);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.basis_ == b.basis_ && a.nvars_ == b.nvars_ &&
           a.terms_ == b.terms_;
  }

  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.basis_ != b.basis_)
      throw std::invalid_argument("polynomial: cross-basis arithmetic");
    if (a.nvars_ != b.nvars_)
      throw std::invalid_argument("polynomial: variable count mismatch");
  }

 private:
  static Polynomial merged(const Polynomial& a, const Polynomial& b,
                           bool subtract) {
    check_compatible(a, b);
    Polynomial r(a.basis_, a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      bool take_a;
      if (i >= a.terms_.size())
        take_a = false;
      else if (j >= b.terms_.size())
        take_a = true;
      else {
        auto cmp = a.terms_[i].first <=> b.terms_[j].first;
        if (cmp == 0) {
          Coeff c = subtract ? Coeff(a.terms_[i].second - b.terms_[j].second)
                             : Coeff(a.terms_[i].second + b.terms_[j].second);
          if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
          ++i;
          ++j;
          continue;
        }
        take_a = cmp < 0;
      }
      if (take_a) {
        r.terms_.push_back(a.terms_[i]);
        ++i;
      } else {
        const Term& t = b.terms_[j];
        r.terms_.emplace_back(t.first,
                              subtract ? Coeff(-t.second) : t.second);
        ++j;
      }
    }
    return r;
  }

  VarBasis basis_ = VarBasis::E;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

using PolyQ = Polynomial<Rat>;
using PolyZ = Polynomial<Int>;

/// Product, optionally discarding all terms of degree > max_deg.
template <typename Coeff>
Polynomial<Coeff> mul(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b,
                      int max_deg = -1) {
  Polynomial<Coeff>::check_compatible(a, b);
  std::map<Monomial, Coeff> acc;
  for (const auto& [ma, ca] : a.terms()) {
    if (max_deg >= 0 && ma.degree() > max_deg) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (max_deg >= 0 && ma.degree() + mb.degree() > max_deg) break;
      Monomial m = ma.times(mb);
      auto [it, inserted] = acc.try_emplace(m, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  return Polynomial<Coeff>::from_map(a.basis(), a.nvars(), acc);
}

template <typename Coeff>
Polynomial<Coeff> operator*(const Polynomial<Coeff>& a,
                            const Polynomial<Coeff>& b) {
  return mul(a, b);
}

template <typename Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& p, int k, int max_deg = -1) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial<Coeff> r =
      Polynomial<Coeff>::constant(p.basis(), p.nvars(), Coeff(1));
  for (int t = 0; t < k; ++t) r = mul(r, p, max_deg);
  return r;
}

/// Running sum that avoids repeated merge costs in long accumulations.
template <typename Coeff>
class PolyAccumulator {
 public:
  PolyAccumulator(VarBasis basis, int nvars) : basis_(basis), nvars_(nvars) {}

  void add(const Polynomial<Coeff>& p, const Coeff& scale = Coeff(1)) {
    if (p.basis() != basis_ || p.nvars() != nvars_)
      throw std::invalid_argument("PolyAccumulator: incompatible polynomial");
    if (scale == 0) return;
    for (const auto& [m, c] : p.terms()) {
      auto [it, inserted] = acc_.try_emplace(m, c * scale);
      if (!inserted) {
        it->second += c * scale;
        if (it->second == 0) acc_.erase(it);
      }
    }
  }

  Polynomial<Coeff> take() {
    Polynomial<Coeff> p =
        Polynomial<Coeff>::from_map(basis_, nvars_, acc_);
    acc_.clear();
    return p;
  }

 private:
  VarBasis basis_;
  int nvars_;
  std::map<Monomial, Coeff> acc_;
};

/// Substitutes variable j by images[j] (all images in one common target
/// basis and variable count).
template <typename Coeff>
Polynomial<Coeff> substitute_linear(
    const Polynomial<Coeff>& p,
    const std::vector<Polynomial<Coeff>>& images) {
  if (static_cast<int>(images.size()) != p.nvars())
    throw std::invalid_argument("substitute_linear: one image per variable");
  VarBasis out_basis = images.empty() ? p.basis() : images[0].basis();
  int out_nvars = images.empty() ? p.nvars() : images[0].nvars();
  // Power cache per variable.
  std::vector<std::vector<Polynomial<Coeff>>> powers(images.size());
  auto power = [&](int j, int e) -> const Polynomial<Coeff>& {
    auto& cache = powers[static_cast<std::size_t>(j)];
    if (cache.empty())
      cache.push_back(
          Polynomial<Coeff>::constant(out_basis, out_nvars, Coeff(1)));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[static_cast<std::size_t>(j)]);
    return cache[static_cast<std::size_t>(e)];
  };
  PolyAccumulator<Coeff> acc(out_basis, out_nvars);
  for (const auto& [m, c] : p.terms()) {
    Polynomial<Coeff> prod =
        Polynomial<Coeff>::constant(out_basis, out_nvars, Coeff(1));
    for (int j = 0; j < p.nvars(); ++j)
      if (m.exp(j) > 0) prod = prod * power(j, m.exp(j));
    acc.add(prod, c);
  }
  return acc.take();
}

/// Variable map x_j |-> signs(j) * x_{perm(j)} (0-based).
template <typename Coeff>
Polynomial<Coeff> apply_signed_permutation(const Polynomial<Coeff>& p,
                                           const Eigen::VectorXi& perm,
                                           const Eigen::VectorXi& signs) {
  std::map<Monomial, Coeff> acc;
  for (const auto& [m, c] : p.terms()) {
    Monomial im(p.nvars());
    int parity = 1;
    for (int j = 0; j < p.nvars(); ++j) {
      im.set_exp(perm(j), m.exp(j));
      if (signs(j) < 0 && m.exp(j) % 2 == 1) parity = -parity;
    }
    Coeff v = parity < 0 ? Coeff(-c) : c;
    auto [it, inserted] = acc.try_emplace(im, v);
    if (!inserted) it->second += v;
  }
  return Polynomial<Coeff>::from_map(p.basis(), p.nvars(), acc);
}

PolyQ to_rational(const PolyZ& p);

/// Requires every coefficient to be integral.
PolyZ to_integer_checked(const PolyQ& p);

std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// q_{2i} = e_1^{2i} + ... + e_n^{2i} (e-basis), 1 <= i <= n.
PolyQ q_power_sum(const GroupType& g, int i);

/// q'_n = e_1 ... e_n; family D only.
PolyQ q_prime(const GroupType& g);

/// Elementary symmetric polynomial of degree i in the squares e_j^2;
/// p_0 = 1.
PolyQ p_elem(int n, int i);

}  // namespace spinexp
