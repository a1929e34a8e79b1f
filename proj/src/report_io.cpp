#include <json.hpp>

#include <sstream>

#include "liegeo/report_io.hpp"

namespace liegeo {

using nlohmann::json;

namespace {

json verdict_json(const AxiomVerdict& v) {
  return json{{"holds", v.holds}, {"witness", v.witness}};
}

template <class M>
json map_json(const M& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

json diameter_json(int d) {
  if (d == kInfDistance) return json("inf");
  return json(d);
}

json fingerprint_json(const Fingerprint& f) {
  return json{{"points", f.points},
              {"lines", f.lines},
              {"line_sizes", map_json(f.line_sizes)},
              {"degrees", map_json(f.degrees)},
              {"diameter", diameter_json(f.diameter)},
              {"symp_ranks", map_json(f.symp_ranks)},
              {"max_singular_dims", map_json(f.max_singular_dims)},
              {"strong", f.strong}};
}

}  // namespace

std::string analysis_to_json(const FullAnalysis& a) {
  const ParapolarReport& r = a.report;
  json j;
  j["points"] = a.fp.points;
  j["lines"] = a.fp.lines;
  j["connected"] = r.connected;
  j["diameter"] = diameter_json(r.diameter);
  j["parapolar"] = r.parapolar();
  j["axioms"] = {{"pps1_local", verdict_json(r.pps1_local)},
                 {"pps1_exists", verdict_json(r.pps1_exists)},
                 {"pps2", verdict_json(r.pps2)},
                 {"pps3", verdict_json(r.pps3)}};
  j["strong"] = r.strong;
  j["special_pairs"] = r.special_pair_count;
  if (r.special_pair_sample)
    j["special_pair_sample"] = {r.special_pair_sample->first, r.special_pair_sample->second};
  j["empty_perp_pairs"] = r.empty_perp_pairs;
  j["symps"] = {{"count", r.symps.size()},
                {"rank_spectrum", r.rank_spectrum},
                {"thickness", r.symp_thickness()}};
  json sizes = json::object();
  {
    std::map<std::size_t, std::size_t> by_size;
    for (const Symp& s : r.symps) ++by_size[s.points.count()];
    sizes = map_json(by_size);
  }
  j["symps"]["sizes"] = sizes;
  j["lacunarity"] = {{"spectrum", r.lacunarity.spectrum},
                     {"disjoint_pair_exists", r.lacunarity.disjoint_pair},
                     {"nonprojective_intersection", r.lacunarity.nonprojective_intersection}};
  if (!r.lacunarity_error.empty()) j["lacunarity"]["error"] = r.lacunarity_error;
  json lv = json::object();
  for (const auto& [k, v] : a.lacunary)
    lv["k=" + std::to_string(k)] = {{"value", v.value},
                                    {"reason", v.reason},
                                    {"every_symp_has_k_dim_singular",
                                     v.every_symp_has_k_dim_singular}};
  j["k_lacunary"] = lv;
  j["max_singular_dims"] = map_json(r.max_singular_dims);
  j["nonprojective_maximals"] = r.nonprojective_maximals;
  j["ks_hypotheses"] = {{"point_symp_nonempty", a.ks.point_symp_nonempty},
                        {"balls_hyperplanes", a.ks.balls_hyperplanes},
                        {"singulars_finite", a.ks.singulars_finite},
                        {"witness", a.ks.witness}};
  j["imbrex"] = {{"applicable", a.imbrex.applicable},
                 {"value", a.imbrex.value},
                 {"witness", a.imbrex.witness}};
  if (a.locally_connected) {
    j["locally_connected"] = *a.locally_connected;
    if (a.lc_witness) j["locally_disconnected_at"] = *a.lc_witness;
  }
  j["fingerprint"] = fingerprint_json(a.fp);
  json res = json::array();
  for (const ResidualSummary& s : a.residuals) {
    json comps = json::array();
    for (ComponentKind k : s.components) comps.push_back(component_kind_name(k));
    res.push_back({{"point", s.point},
                   {"fingerprint", fingerprint_json(s.fp)},
                   {"fingerprint_text", s.fp.to_string()},
                   {"components", comps},
                   {"planes_outside_symps", s.planes_outside_symps}});
  }
  j["residuals"] = res;
  return j.dump(2);
}

std::string analysis_to_text(const FullAnalysis& a) {
  const ParapolarReport& r = a.report;
  std::ostringstream s;
  auto set_str = [](const std::set<int>& st) {
    std::string o = "{";
    bool first = true;
    for (int x : st) {
      if (!first) o += ",";
      first = false;
      o += std::to_string(x);
    }
    return o + "}";
  };
  s << "points: " << a.fp.points << "   lines: " << a.fp.lines << "\n";
  s << "connected: " << (r.connected ? "yes" : "no") << "   diameter: ";
  if (r.diameter == kInfDistance) s << "inf";
  else s << r.diameter;
  s << "\n";
  s << "parapolar: " << (r.parapolar() ? "yes" : "no") << "\n";
  if (!r.pps1_local.holds) s << "  pps1 fails: " << r.pps1_local.witness << "\n";
  if (!r.pps1_exists.holds) s << "  pps1 existence fails: " << r.pps1_exists.witness << "\n";
  if (!r.pps2.holds) s << "  pps2 fails: " << r.pps2.witness << "\n";
  if (!r.pps3.holds) s << "  pps3 fails: " << r.pps3.witness << "\n";
  s << "strong: " << (r.strong ? "yes" : "no") << "   special pairs: "
    << r.special_pair_count << "\n";
  s << "symps: " << r.symps.size() << "   rank spectrum: " << set_str(r.rank_spectrum)
    << "   thickness: " << r.symp_thickness() << "\n";
  s << "lacunarity spectrum: " << set_str(r.lacunarity.spectrum)
    << (r.lacunarity.disjoint_pair ? "  (disjoint pair exists)" : "") << "\n";
  s << "k-lacunary:";
  for (const auto& [k, v] : a.lacunary) s << " k=" << k << ":" << (v.value ? "yes" : "no");
  s << "\n";
  s << "max singular dims:";
  for (const auto& [d, c] : r.max_singular_dims) s << " " << d << "(x" << c << ")";
  s << "\n";
  s << "ks hypotheses: " << a.ks.point_symp_nonempty << " " << a.ks.balls_hyperplanes
    << " " << a.ks.singulars_finite << "\n";
  s << "imbrex: "
    << (a.imbrex.applicable ? (a.imbrex.value ? "yes" : "no") : "not applicable") << "\n";
  if (a.locally_connected)
    s << "locally connected: " << (*a.locally_connected ? "yes" : "no") << "\n";
  if (!a.residuals.empty()) {
    s << "residuals (" << a.residuals.size() << " sampled):\n";
    for (const ResidualSummary& rs : a.residuals) {
      s << "  point " << rs.point << ": " << rs.fp.to_string() << " [";
      for (std::size_t i = 0; i < rs.components.size(); ++i) {
        if (i) s << ",";
        s << component_kind_name(rs.components[i]);
      }
      s << "]\n";
    }
  }
  return s.str();
}

}  // namespace liegeo
