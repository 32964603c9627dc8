#include "spinexp/bounds.hpp"

#include <stdexcept>

namespace spinexp {

MTable MTable::defaults() {
  MTable t;
  t.entries_[3] = {0, MProvenance::Builtin};
  t.entries_[4] = {1, MProvenance::Builtin};
  return t;
}

void MTable::set(int i, int value) {
  if (i < 3) throw std::invalid_argument("MTable: i >= 3");
  if (value < 0) throw std::invalid_argument("MTable: m(i) >= 0");
  entries_[i] = {value, MProvenance::User};
}

bool MTable::has(int i) const { return entries_.count(i) > 0; }

int MTable::get(int i) const {
  auto it = entries_.find(i);
  if (it == entries_.end())
    throw std::out_of_range("MTable: m(" + std::to_string(i) +
                            ") is not available");
  return it->second.first;
}

MProvenance MTable::provenance(int i) const {
  auto it = entries_.find(i);
  if (it == entries_.end())
    throw std::out_of_range("MTable: m(" + std::to_string(i) +
                            ") is not available");
  return it->second.second;
}

namespace {

int v2_factorial(int k) {  // v2(k!)
  if (k <= 1) return 0;
  return static_cast<int>(v2(factorial(static_cast<unsigned long>(k))));
}

}  // namespace

int g_exponent(int i, const MTable& m) {
  if (i < 3) throw std::invalid_argument("g_exponent: i >= 3");
  return 1 + m.get(i) + v2_factorial(i - 1);
}

int t_exponent(int i, const MTable& m) {
  if (i < 3) throw std::invalid_argument("t_exponent: i >= 3");
  int sum = 0;
  for (int j = 3; j <= i; ++j) sum += g_exponent(j, m);
  return 1 + sum + v2_factorial(i - 1);
}

std::vector<BoundsRow> bounds_table(int imax, const MTable& m) {
  if (imax < 3) throw std::invalid_argument("bounds_table: imax >= 3");
  std::vector<BoundsRow> rows;
  bool all_g_known = true;
  for (int i = 3; i <= imax; ++i) {
    BoundsRow row;
    row.i = i;
    int v2f = v2_factorial(i - 1);
    if (m.has(i)) {
      row.m = m.get(i);
      row.m_provenance = m.provenance(i);
      row.g = g_exponent(i, m);
      row.two_pow_g = int_pow(2, static_cast<unsigned long>(*row.g));
    } else {
      all_g_known = false;
      row.g_formula =
          "1+m(" + std::to_string(i) + ")+" + std::to_string(v2f);
    }
    if (all_g_known) {
      row.t = t_exponent(i, m);
      row.two_pow_t = int_pow(2, static_cast<unsigned long>(*row.t));
    } else {
      row.t_formula = "1+sum_{j=3}^{" + std::to_string(i) + "}g(j)+" +
                      std::to_string(v2f);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace spinexp
