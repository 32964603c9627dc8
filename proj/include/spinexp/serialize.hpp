// JSON / CSV / text renderings of the domain types. JSON output is
// deterministic: object keys keep insertion order and timing fields are
// emitted only on request.
#pragma once

#include "spinexp/bounds.hpp"
#include "spinexp/exponent.hpp"
#include "spinexp/identities.hpp"
#include "spinexp/weyl.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace spinexp {

using Json = nlohmann::ordered_json;

Json weight_json(const Weight& w);
Json orbit_json(const Orbit& o);
Json polynomial_json(const PolyQ& p);
Json polynomial_json(const PolyZ& p);
Json group_ring_json(const GroupRingElement& x);
Json report_json(const VerificationReport& r, bool with_timings = false);
Json reports_json(const std::vector<VerificationReport>& rs,
                  std::uint64_t base_seed, bool with_timings = false);
Json tau_json(const TauResult& t, bool with_timings = false);
Json bounds_json(const std::vector<BoundsRow>& rows);

std::string bounds_csv(const std::vector<BoundsRow>& rows);
std::string bounds_text(const std::vector<BoundsRow>& rows);
std::string reports_text(const std::vector<VerificationReport>& rs);
std::string polynomial_text(const PolyQ& p,
                            const std::string& var_stem = "e");

}  // namespace spinexp
