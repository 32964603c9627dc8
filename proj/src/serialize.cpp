#include "spinexp/serialize.hpp"

#include <sstream>

namespace spinexp {

namespace {

std::string family_letter(const GroupType& g) {
  return g.family == Family::B ? "B" : "D";
}

Json exps_json(const Monomial& m) {
  Json a = Json::array();
  for (int j = 0; j < m.nvars(); ++j) a.push_back(m.exp(j));
  return a;
}

}  // namespace

Json weight_json(const Weight& w) {
  Json j;
  j["family"] = family_letter(w.group);
  j["n"] = w.group.rank;
  Json omega = Json::array();
  for (int k = 0; k < w.group.rank; ++k) omega.push_back(w.omega(k));
  j["omega"] = omega;
  return j;
}

Json orbit_json(const Orbit& o) {
  Json arr = Json::array();
  for (const Eigen::VectorXi& v : o.elements)
    arr.push_back(weight_json(Weight(o.group, v)));
  return arr;
}

Json polynomial_json(const PolyQ& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["exps"] = exps_json(m);
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    arr.push_back(std::move(t));
  }
  return arr;
}

Json polynomial_json(const PolyZ& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["exps"] = exps_json(m);
    t["num"] = c.get_str();
    t["den"] = "1";
    arr.push_back(std::move(t));
  }
  return arr;
}

Json group_ring_json(const GroupRingElement& x) {
  Json arr = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json t;
    t["weight"] = weight_json(Weight(x.group(), w));
    t["coeff"] = c.get_str();
    arr.push_back(std::move(t));
  }
  return arr;
}

Json report_json(const VerificationReport& r, bool with_timings) {
  Json j;
  j["id"] = r.id;
  Json params;
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["status"] = r.pass ? "pass" : "fail";
  j["witness"] = polynomial_json(r.witness);
  j["seed"] = r.seed;
  if (with_timings) j["millis"] = r.millis;
  return j;
}

Json reports_json(const std::vector<VerificationReport>& rs,
                  std::uint64_t base_seed, bool with_timings) {
  Json j;
  j["seed"] = base_seed;
  std::size_t passed = 0;
  for (const VerificationReport& r : rs)
    if (r.pass) ++passed;
  j["total"] = rs.size();
  j["passed"] = passed;
  j["all_pass"] = passed == rs.size();
  Json arr = Json::array();
  for (const VerificationReport& r : rs)
    arr.push_back(report_json(r, with_timings));
  j["reports"] = arr;
  return j;
}

Json tau_json(const TauResult& t, bool with_timings) {
  Json j;
  j["family"] = family_letter(t.group);
  j["n"] = t.group.rank;
  j["i"] = t.i;
  if (t.stabilized && t.finite)
    j["tau"] = t.tau.get_str();
  else if (t.stabilized)
    j["tau"] = "infinite";
  else
    j["tau"] = "not stabilized";
  Json divisors = Json::array();
  for (const Int& d : t.divisors) divisors.push_back(d.get_str());
  j["divisors"] = divisors;
  Json grid;
  grid["mu_box"] = t.final_grid.mu_box;
  grid["rep_bound"] = t.final_grid.rep_bound;
  j["grid"] = grid;
  j["stabilized"] = t.stabilized;
  Json trace = Json::array();
  for (const TauStep& s : t.trace) {
    Json e;
    e["mu_box"] = s.grid.mu_box;
    e["rep_bound"] = s.grid.rep_bound;
    e["rank"] = s.phi_rank;
    e["changed"] = s.changed;
    trace.push_back(std::move(e));
  }
  j["trace"] = trace;
  if (with_timings) j["millis"] = t.millis;
  return j;
}

Json bounds_json(const std::vector<BoundsRow>& rows) {
  Json arr = Json::array();
  for (const BoundsRow& r : rows) {
    Json j;
    j["i"] = r.i;
    if (r.m) {
      j["m"] = *r.m;
      j["m_source"] =
          r.m_provenance == MProvenance::Builtin ? "paper" : "user";
    } else {
      j["m"] = nullptr;
    }
    if (r.g)
      j["g"] = *r.g;
    else
      j["g"] = r.g_formula;
    if (r.t)
      j["t"] = *r.t;
    else
      j["t"] = r.t_formula;
    if (r.two_pow_g) j["annihilator_gamma"] = r.two_pow_g->get_str();
    if (r.two_pow_t) j["annihilator_chow"] = r.two_pow_t->get_str();
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream out;
  out << "i,m,m_source,g,t,annihilator_gamma,annihilator_chow\n";
  for (const BoundsRow& r : rows) {
    out << r.i << ",";
    if (r.m)
      out << *r.m << ","
          << (r.m_provenance == MProvenance::Builtin ? "paper" : "user");
    else
      out << ",";
    out << ",";
    if (r.g)
      out << *r.g;
    else
      out << r.g_formula;
    out << ",";
    if (r.t)
      out << *r.t;
    else
      out << r.t_formula;
    out << ",";
    if (r.two_pow_g) out << r.two_pow_g->get_str();
    out << ",";
    if (r.two_pow_t) out << r.two_pow_t->get_str();
    out << "\n";
  }
  return out.str();
}

std::string bounds_text(const std::vector<BoundsRow>& rows) {
  std::ostringstream out;
  out << "  i   m(i)    g(i)            t(i)            2^g       2^t\n";
  for (const BoundsRow& r : rows) {
    out << "  " << r.i << "   ";
    if (r.m)
      out << *r.m << (r.m_provenance == MProvenance::Builtin ? " (paper)"
                                                             : " (user) ");
    else
      out << "?       ";
    out << "  ";
    if (r.g)
      out << *r.g << "              ";
    else
      out << r.g_formula << "  ";
    if (r.t)
      out << *r.t << "              ";
    else
      out << r.t_formula << "  ";
    if (r.two_pow_g) out << r.two_pow_g->get_str();
    out << "       ";
    if (r.two_pow_t) out << r.two_pow_t->get_str();
    out << "\n";
  }
  return out.str();
}

std::string reports_text(const std::vector<VerificationReport>& rs) {
  std::ostringstream out;
  for (const VerificationReport& r : rs)
    out << (r.pass ? "pass" : "FAIL") << "  " << r.id << "\n";
  std::size_t passed = 0;
  for (const VerificationReport& r : rs)
    if (r.pass) ++passed;
  out << passed << "/" << rs.size() << " statements pass\n";
  return out.str();
}

std::string polynomial_text(const PolyQ& p, const std::string& var_stem) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat a = c;
    if (!first) {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    }
    bool has_vars = m.degree() > 0;
    if (a != 1 || !has_vars) out << to_string(a);
    bool printed = a != 1 || !has_vars;
    for (int j = 0; j < m.nvars(); ++j) {
      if (m.exp(j) == 0) continue;
      if (printed) out << "*";
      out << var_stem << (j + 1);
      if (m.exp(j) > 1) out << "^" << m.exp(j);
      printed = true;
    }
  }
  return out.str();
}

}  // namespace spinexp
