#include "liegeo/tables.hpp"

#include <json.hpp>

#include <cstdlib>
#include <map>
#include <memory>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "liegeo/analysis.hpp"
#include "liegeo/construct.hpp"
#include "liegeo/errors.hpp"

namespace liegeo {

using nlohmann::json;

std::string default_expectations_path() {
  if (const char* env = std::getenv("LIEGEO_DATA")) return env;
  for (const char* cand : {"data/table_expectations.json",
                           "../data/table_expectations.json",
                           "../../data/table_expectations.json"})
    if (std::filesystem::exists(cand)) return cand;
  return "data/table_expectations.json";
}

namespace {

std::set<int> to_int_set(const json& arr) {
  std::set<int> s;
  for (const auto& v : arr) s.insert(v.get<int>());
  return s;
}

}  // namespace

TableOutcome verify_tables(const std::string& data_path, const std::string& filter,
                           bool include_stretch) {
  std::ifstream f(data_path);
  if (!f) throw InputError("cannot open expectation data: " + data_path);
  json data = json::parse(f);

  TableOutcome out;
  std::ostringstream log;

  // several cells share a witness; analyze each construction once
  std::map<std::string, std::shared_ptr<const FullAnalysis>> cache;
  auto analyzed = [&](const std::string& spec) {
    auto it = cache.find(spec);
    if (it != cache.end()) return it->second;
    Geometry g = build_construction(spec);
    AnalyzeOptions opts;
    opts.residual_sample = g.points() > 512 ? 20 : -1;
    auto a = std::make_shared<const FullAnalysis>(run_analysis(g, opts));
    cache.emplace(spec, a);
    return a;
  };

  for (const json& row : data.at("rows")) {
    std::string id = "table " + std::to_string(row.at("table").get<int>()) +
                     ", k=" + std::to_string(row.at("k").get<int>()) + ", " +
                     row.at("row").get<std::string>();
    std::string witness = row.at("witness").get<std::string>();
    std::string haystack = id + " " + witness + " " + row.value("cite", std::string());
    if (!filter.empty() && haystack.find(filter) == std::string::npos) continue;
    if (witness == "no-desk-scale-witness") {
      ++out.skipped;
      log << "SKIPPED " << id << " (" << row.value("skip_reason", std::string("no witness"))
          << ") [" << row.value("cite", std::string()) << "]\n";
      continue;
    }
    if (row.value("stretch", false) && !include_stretch) {
      ++out.skipped;
      log << "SKIPPED " << id << " (stretch fixture, enable with --stretch)\n";
      continue;
    }

    std::vector<std::string> problems;
    try {
      std::shared_ptr<const FullAnalysis> a = analyzed(witness);
      const json& exp = row.at("expect");

      if (!a->report.parapolar()) problems.push_back("not parapolar");
      if (a->report.rank_spectrum != to_int_set(exp.at("rank_spectrum")))
        problems.push_back("rank spectrum mismatch");
      std::set<int> dims;
      for (const auto& [d, c] : a->report.max_singular_dims) {
        (void)c;
        dims.insert(d);
      }
      if (dims != to_int_set(exp.at("max_singular_dims")))
        problems.push_back("maximal singular dimension set mismatch");
      int exp_diam = exp.at("diameter").get<int>();
      if (a->report.diameter != exp_diam) problems.push_back("diameter mismatch");
      if (a->report.strong != exp.at("strong").get<bool>())
        problems.push_back("strongness mismatch");
      if (a->report.symp_thickness() != exp.at("thickness").get<std::string>())
        problems.push_back("symp thickness mismatch (" + a->report.symp_thickness() + ")");
      int k = row.at("k").get<int>();
      LacunarityVerdict kv = is_k_lacunary(a->report, k);
      if (kv.value != exp.at("k_lacunary").get<bool>())
        problems.push_back("k-lacunarity mismatch (" + kv.reason + ")");

      if (row.contains("residual_of")) {
        // one cell to the left in the row is the point-residual
        std::shared_ptr<const FullAnalysis> la =
            analyzed(row.at("residual_of").get<std::string>());
        for (const ResidualSummary& rs : a->residuals)
          if (!(rs.fp == la->fp)) {
            problems.push_back("residual at point " + std::to_string(rs.point) +
                               " does not match the left cell");
            break;
          }
        if (a->residuals.empty()) problems.push_back("no residuals sampled");
        LacunarityVerdict lkv = is_k_lacunary(la->report, k - 1);
        if (!lkv.value)
          problems.push_back("left cell is not (k-1)-lacunary: " + lkv.reason);
      }
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }

    if (problems.empty()) {
      ++out.passed;
      log << "PASS    " << id << " [" << witness << "]\n";
    } else {
      ++out.failed;
      log << "FAIL    " << id << " [" << witness << "]";
      for (const std::string& p : problems) log << "\n        - " << p;
      log << "\n";
    }
  }
  log << out.passed << " passed, " << out.failed << " failed, " << out.skipped
      << " skipped\n";
  out.log = log.str();
  return out;
}

}  // namespace liegeo
