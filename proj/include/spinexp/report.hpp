// Machine-readable outcome of one exact identity check: pass iff the
// witness difference polynomial is identically zero.
#pragma once

#include "spinexp/polynomial.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace spinexp {

struct VerificationReport {
  std::string id;
  std::map<std::string, std::string> params;
  bool pass = false;
  PolyQ witness;  // zero iff pass
  std::uint64_t seed = 0;
  double millis = 0.0;
};

/// Checks the classical Newton identity
///   (-1)^(i-1) q_{2i} = i p_i - sum_{j=1}^{i-1} (-1)^(j-1) p_{i-j} q_{2j}
/// by exact expansion, and also evaluates the variant with p_{i-1-j} in
/// place of p_{i-j}; the report records which index convention holds.
VerificationReport newton_verify(int n, int i);

}  // namespace spinexp
