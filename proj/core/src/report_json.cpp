#include <json.hpp>

#include "ellcarm/classify.hpp"

namespace ellcarm {

namespace {

using nlohmann::ordered_json;

ordered_json point_json(const ProjectivePoint& P) {
  ordered_json j;
  if (P.is_identity()) {
    j["form"] = "identity";
  } else if (P.is_affine()) {
    const AffinePoint a = P.to_affine();
    j["form"] = "affine";
    j["x"] = a.x.get_str();
    j["y"] = a.y.get_str();
  } else {
    j["form"] = "mixed identity";
    j["X"] = P.X.get_str();
    j["Y"] = P.Y.get_str();
    j["Z"] = P.Z.get_str();
  }
  return j;
}

ordered_json flag_json(const Flag& f) {
  if (f.value) return *f.value;
  return ordered_json{{"value", "n/a"}, {"reason", f.reason}};
}

ordered_json korselt_json(const KorseltWitness& w) {
  ordered_json j;
  j["holds"] = w.holds;
  j["target"] = w.target.get_str();
  ordered_json rows = ordered_json::array();
  for (const auto& c : w.per_prime) {
    ordered_json r{{"p", c.p.get_str()},
                   {"e", c.e},
                   {"a_p", std::to_string(c.a_p)},
                   {"value", c.value.get_str()},
                   {"holds", c.holds}};
    if (!c.note.empty()) r["note"] = c.note;
    rows.push_back(std::move(r));
  }
  j["per_prime"] = std::move(rows);
  if (w.failing_prime) {
    j["failing_prime"] = w.failing_prime->get_str();
    j["failing_condition"] = w.failing_condition;
  }
  return j;
}

}  // namespace

std::string to_json_line(const ClassificationReport& r) {
  ordered_json j;
  j["N"] = r.N.get_str();
  j["curve"] = r.curve.to_string();
  j["factors"] = r.factors.to_string();
  if (r.point)
    j["point"] = {{"x", r.point->x.get_str()}, {"y", r.point->y.get_str()}};
  else
    j["point"] = nullptr;
  if (r.d) j["d"] = std::to_string(*r.d);
  j["a_N"] = r.a_N.get_str();
  j["group_multiplier"] = r.group_multiplier.get_str();

  ordered_json traces = ordered_json::array();
  for (const auto& t : r.traces)
    traces.push_back({{"p", t.p.get_str()},
                      {"e", t.e},
                      {"a_p", std::to_string(t.a_p)},
                      {"a_pe", t.a_pe.get_str()}});
  j["traces"] = std::move(traces);
  ordered_json eps = ordered_json::array();
  for (const auto& e : r.exponents)
    eps.push_back({{"p", e.p.get_str()}, {"e", e.e}, {"epsilon", e.epsilon.get_str()}});
  j["exponents"] = std::move(eps);

  j["elliptic_pp"] = flag_json(r.elliptic_pp);
  j["gordon_pp"] = flag_json(r.gordon_pp);
  j["euler_pp"] = flag_json(r.euler_pp);
  j["strong_pp"] = flag_json(r.strong_pp);
  j["elliptic_carmichael"] = flag_json(r.elliptic_carmichael);
  j["euler_carmichael"] = flag_json(r.euler_carmichael);
  j["strong_carmichael"] = flag_json(r.strong_carmichael);
  j["korselt_type1"] = flag_json(r.korselt_type1);
  j["korselt_type2"] = flag_json(r.korselt_type2);

  ordered_json w = ordered_json::object();
  if (r.elliptic) {
    ordered_json e{{"multiplier", r.elliptic->multiplier.get_str()},
                   {"multiple", point_json(r.elliptic->multiple)}};
    ordered_json at = ordered_json::object();
    for (const auto& [p, id] : r.elliptic->identity_at) at[p.get_str()] = id;
    e["identity_at"] = std::move(at);
    w["elliptic"] = std::move(e);
  }
  if (r.gordon) {
    ordered_json g{{"d", std::to_string(r.gordon->d)},
                   {"jacobi", r.gordon->jacobi_symbol},
                   {"n_is_1_mod_4", r.gordon->n_is_1_mod_4}};
    if (r.gordon->jacobi_symbol == -1) g["multiple"] = point_json(r.gordon->multiple.multiple);
    w["gordon"] = std::move(g);
  }
  if (r.euler)
    w["euler"] = {{"is_double", r.euler->is_double},
                  {"multiplier", r.euler->multiplier.get_str()},
                  {"multiple", point_json(r.euler->multiple)},
                  {"branch", to_string(r.euler->branch)}};
  if (r.strong) {
    ordered_json s{{"s", r.strong->s},
                   {"t", r.strong->t.get_str()},
                   {"t_branch", r.strong->t_branch},
                   {"reached", point_json(r.strong->reached)}};
    s["r"] = r.strong->r ? ordered_json(*r.strong->r) : ordered_json(nullptr);
    w["strong"] = std::move(s);
  }
  if (r.type1) w["korselt_type1"] = korselt_json(*r.type1);
  if (r.type2) w["korselt_type2"] = korselt_json(*r.type2);
  if (r.euler_korselt) w["euler_carmichael"] = korselt_json(*r.euler_korselt);
  if (r.strong_korselt) w["strong_carmichael"] = korselt_json(*r.strong_korselt);
  j["witnesses"] = std::move(w);
  j["notes"] = r.notes;
  return j.dump();
}

}  // namespace ellcarm
