// Torsion-bound exponents g(i) = 1 + m(i) + v2((i-1)!) and
// t(i) = 1 + sum_{j=3}^i g(j) + v2((i-1)!), with the m(i) inputs either
// built in (i = 3, 4) or supplied by the caller.
#pragma once

#include "spinexp/arith.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinexp {

enum class MProvenance { Builtin, User };

class MTable {
 public:
  /// m(3) = 0 and m(4) = 1 are preloaded.
  static MTable defaults();

  void set(int i, int value);  // user-provided entry, i >= 3, value >= 0
  bool has(int i) const;
  int get(int i) const;  // throws when missing
  MProvenance provenance(int i) const;

 private:
  std::map<int, std::pair<int, MProvenance>> entries_;
};

/// g(i) = 1 + m(i) + v2((i-1)!), i >= 3.
int g_exponent(int i, const MTable& m);

/// t(i) = 1 + sum_{j=3}^{i} g(j) + v2((i-1)!), i >= 3.
int t_exponent(int i, const MTable& m);

struct BoundsRow {
  int i = 0;
  std::optional<int> m;           // missing -> symbolic row
  MProvenance m_provenance = MProvenance::Builtin;
  std::optional<int> g;
  std::optional<int> t;
  std::string g_formula;          // filled for symbolic rows
  std::string t_formula;
  std::optional<Int> two_pow_g;   // annihilator 2^g when g is known
  std::optional<Int> two_pow_t;
};

/// Rows for i = 3..imax. Rows whose m(i) is unknown carry the symbolic
/// formulas instead of numbers; t becomes symbolic as soon as any g(j),
/// j <= i, is.
std::vector<BoundsRow> bounds_table(int imax, const MTable& m);

}  // namespace spinexp
