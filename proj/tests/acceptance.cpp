// Acceptance suite: one pass/fail line per criterion. Each criterion builds
// its instances, checks the frozen expectations at exact equality, and is
// timed against its budget. Exit code 0 only when every criterion passes.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "liegeo/analysis.hpp"
#include "liegeo/assembly.hpp"
#include "liegeo/construct.hpp"
#include "liegeo/parallel.hpp"
#include "liegeo/tables.hpp"
#include "oracle.hpp"

using namespace liegeo;

namespace {

struct Checker {
  std::vector<std::string> failures;
  template <class T, class U>
  void eq(const T& got, const U& want, const std::string& what) {
    if (!(got == static_cast<T>(want))) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
  void is(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
};

struct Registry {
  std::map<std::string, Geometry> geoms;
  std::map<std::string, std::shared_ptr<FullAnalysis>> analyses;

  const Geometry& geom(const std::string& spec) {
    auto it = geoms.find(spec);
    if (it == geoms.end()) it = geoms.emplace(spec, build_construction(spec)).first;
    return it->second;
  }
  const FullAnalysis& full(const std::string& spec, int sample = -2) {
    auto it = analyses.find(spec);
    if (it == analyses.end()) {
      AnalyzeOptions opts;
      const Geometry& g = geom(spec);
      opts.residual_sample = sample == -2 ? (g.points() > 512 ? 20 : -1) : sample;
      it = analyses.emplace(spec, std::make_shared<FullAnalysis>(run_analysis(g, opts)))
               .first;
    }
    return *it->second;
  }
};

Registry reg;
bool opt_full = false;
bool opt_stretch = false;
std::string opt_data;

bool k_lac(const ParapolarReport& r, int k) { return is_k_lacunary(r, k).value; }

void criterion1(Checker& c) {
  c.eq(oracle::singular_points("sp", 2, 6).size(), 63u, "oracle W(5,2) points");
  c.eq(oracle::ti_lines("sp", 2, 6).size(), 315u, "oracle W(5,2) lines");
  c.eq(oracle::singular_points("o+", 2, 6).size(), 35u, "oracle Q+(5,2) points");
  c.eq(oracle::singular_points("o+", 2, 8).size(), 135u, "oracle Q+(7,2) points");
  c.eq(oracle::singular_points("o+", 2, 10).size(), 527u, "oracle rank-5 points");

  const Geometry& w = reg.geom("polar:sp:6:2");
  c.eq(w.points(), 63u, "W(5,2) points");
  c.eq(w.line_count(), 315u, "W(5,2) lines");
  PolarVerdict vw = verify_polar(w);
  c.is(vw.is_polar, "W(5,2) polar");
  c.eq(vw.rank, 3, "W(5,2) rank");
  c.is(vw.building_thick, "W(5,2) thick");

  c.eq(reg.geom("polar:o+:6:2").points(), 35u, "Q+(5,2) points");

  const Geometry& q7 = reg.geom("polar:o+:8:2");
  c.eq(q7.points(), 135u, "Q+(7,2) points");
  PolarVerdict v7 = verify_polar(q7);
  c.is(v7.is_polar, "Q+(7,2) polar");
  c.is(!v7.building_thick, "Q+(7,2) non-thick");

  ClassicalPolar q9 = build_classical({FormKind::Hyperbolic, 2, 10});
  c.eq(q9.geom.points(), 527u, "rank-5 hyperbolic points");
  c.eq(q9.rank, 5, "rank-5 hyperbolic rank");
}

void criterion2(Checker& c) {
  const FullAnalysis& a = reg.full("A:4:2:2");
  const ParapolarReport& r = a.report;
  c.is(r.parapolar(), "parapolar");
  c.is(r.strong, "strong");
  c.eq(r.diameter, 2, "diameter");
  c.is(r.rank_spectrum == std::set<int>{3}, "rank spectrum {3}");
  c.eq(r.symps.size(), 31u, "31 symps");
  for (const Symp& s : r.symps)
    if (s.points.count() != 35) c.is(false, "symp of 35 points");
  c.is(r.lacunarity.spectrum == std::set<int>{2}, "lacunarity spectrum {2}");
  c.is(!r.lacunarity.disjoint_pair, "no disjoint symp pairs");
  c.is(k_lac(r, -1), "(-1)-lacunary");
  c.is(k_lac(r, 0), "0-lacunary");
  c.is(k_lac(r, 1), "1-lacunary");
  c.is(!k_lac(r, 2), "not 2-lacunary");
}

void criterion3(Checker& c) {
  const FullAnalysis& a = reg.full("A:5:3:2");
  const ParapolarReport& r = a.report;
  c.eq(a.fp.points, 1395u, "1395 points");
  c.is(r.parapolar(), "parapolar");
  c.is(r.strong, "strong");
  c.eq(r.diameter, 3, "diameter");
  c.is(r.rank_spectrum == std::set<int>{3}, "rank spectrum {3}");
  c.is(k_lac(r, 0), "0-lacunary");
  c.is(a.ks.point_symp_nonempty, "points see every symp");
  c.is(a.ks.balls_hyperplanes, "radius-2 balls are geometric hyperplanes");
}

void criterion4(Checker& c) {
  const FullAnalysis& a = reg.full("dualpolar:sp:6:2");
  const ParapolarReport& r = a.report;
  c.is(r.parapolar(), "parapolar");
  c.is(r.strong, "strong");
  c.eq(r.diameter, 3, "diameter");
  c.is(r.rank_spectrum == std::set<int>{2}, "rank spectrum {2}");
  c.is(k_lac(r, 0), "0-lacunary");
  c.is(a.ks.balls_hyperplanes, "radius-2 balls are geometric hyperplanes");
  c.eq(a.residuals.size(), reg.geom("dualpolar:sp:6:2").points(),
       "residuals at every point");
  for (const ResidualSummary& rs : a.residuals)
    for (ComponentKind k : rs.components)
      if (k != ComponentKind::SingleLine) c.is(false, "component not single-line");
}

void criterion5(Checker& c) {
  const Geometry& g = reg.geom("halfspin:o+:10:2");
  c.eq(g.points(), 2295u, "2295 points");
  int sample = opt_full ? static_cast<int>(g.points()) : 20;
  AnalyzeOptions opts;
  opts.residual_sample = sample;
  FullAnalysis a = run_analysis(g, opts);
  reg.analyses["halfspin:o+:10:2"] = std::make_shared<FullAnalysis>(a);
  const ParapolarReport& r = a.report;
  c.is(r.parapolar(), "parapolar");
  c.is(r.rank_spectrum == std::set<int>{4}, "rank spectrum {4}");
  c.is(!r.lacunarity.spectrum.count(1), "1 not in lacunarity spectrum");
  c.is(!r.lacunarity.spectrum.count(2), "2 not in lacunarity spectrum");
  const Fingerprint left = reg.full("A:4:2:2").fp;
  c.eq(a.residuals.size(), static_cast<std::size_t>(sample), "residual sample size");
  for (const ResidualSummary& rs : a.residuals)
    if (!(rs.fp == left)) {
      c.is(false, "residual at point " + std::to_string(rs.point) +
                      " does not match the line grassmannian");
      break;
    }
}

void criterion6(Checker& c) {
  const FullAnalysis& lw = reg.full("prod:(line:3)x(polar:sp:6:2)");
  c.eq(lw.report.symps.size(), 318u, "318 symps");
  c.is(lw.report.rank_spectrum == std::set<int>{2, 3}, "rank spectrum {2,3}");
  c.is(k_lac(lw.report, 0), "0-lacunary");
  c.eq(lw.report.diameter, 3, "diameter 1 + 2");

  const FullAnalysis& seg = reg.full("prod:(A:2:1:2)x(A:2:1:2)");
  // two grids over a shared factor line meet in a full line, so the spectrum
  // is {0,1}; a bare {0} would contradict the never-1-lacunary property of
  // strong minimum-rank-2 geometries checked in criterion 7
  c.is(seg.report.lacunarity.spectrum == std::set<int>{0, 1},
       "segre lacunarity spectrum {0,1}");
  c.is(!seg.report.lacunarity.disjoint_pair, "no disjoint pairs");
  c.is(k_lac(seg.report, -1), "(-1)-lacunary");
  c.is(seg.imbrex.applicable && seg.imbrex.value, "imbrex");
}

void criterion7(Checker& c) {
  const char* corpus[] = {"A:4:2:2",
                          "A:5:2:2",
                          "A:5:3:2",
                          "dualpolar:sp:6:2",
                          "prod:(line:3)x(A:2:1:2)",
                          "prod:(A:2:1:2)x(A:2:1:2)",
                          "prod:(line:3)x(prod:(line:3)x(line:3))",
                          "prod:(line:3)x(polar:sp:6:2)",
                          "prod:(line:3)x(polar:o+:6:2)",
                          "Bgr:o+:8:2:k=2",
                          "Bgr:sp:6:2:k=2"};
  for (const char* spec : corpus) {
    const FullAnalysis& a = reg.full(spec, 0);
    const ParapolarReport& r = a.report;
    const std::string tag = std::string(" [") + spec + "]";
    if (!r.parapolar()) {
      c.is(false, "corpus member not parapolar" + tag);
      continue;
    }
    if (k_lac(r, 0)) {
      c.is(r.strong, "0-lacunary but not strong" + tag);
      c.is(r.diameter <= 3, "0-lacunary with diameter > 3" + tag);
    }
    if (r.strong && r.min_rank() == 2)
      c.is(!k_lac(r, 1), "strong minimum-rank-2 but 1-lacunary" + tag);
    c.is(r.pps3.holds, "a line lies in no symp" + tag);
    // no two symps share a non-collinear pair
    const Geometry& g = reg.geom(spec);
    bool unique_ok = true;
    for (std::size_t i = 0; i < r.symps.size() && unique_ok; ++i)
      for (std::size_t j = i + 1; j < r.symps.size() && unique_ok; ++j) {
        DynBitset meet = r.symps[i].points & r.symps[j].points;
        auto idx = meet.to_indices();
        for (std::size_t x = 0; x < idx.size() && unique_ok; ++x)
          for (std::size_t y = x + 1; y < idx.size(); ++y)
            if (!g.adjacent(idx[x], idx[y])) {
              unique_ok = false;
              break;
            }
      }
    c.is(unique_ok, "two symps share a non-collinear pair" + tag);
  }
  // uniform-rank instances: singular subspaces of dimension < rank lie in
  // symps (checked on the small members)
  for (const char* spec : {"A:4:2:2", "prod:(A:2:1:2)x(A:2:1:2)", "dualpolar:sp:6:2"}) {
    const Geometry& g = reg.geom(spec);
    const ParapolarReport& r = reg.full(spec, 0).report;
    int d = *r.rank_spectrum.begin();
    for (int dim = 1; dim <= d - 1; ++dim)
      for (const DynBitset& s : singular_subspaces_of_dim(g, dim)) {
        bool inside = false;
        for (const Symp& sy : r.symps)
          if (s.is_subset_of(sy.points)) {
            inside = true;
            break;
          }
        if (!inside)
          c.is(false, std::string("singular subspace outside every symp [") + spec + "]");
      }
  }
}

void criterion8(Checker& c) {
  for (const char* spec : {"polar:sp:6:2", "A:4:2:2"}) {
    const std::string tag = std::string(" [double ") + spec + "]";
    std::vector<Geometry> sheets{reg.geom(spec), reg.geom(spec)};
    SheetAssembly asmb = make_assembly(std::move(sheets), {{{0, 0}, {1, 0}}});
    c.is(asmb.c1_ok, "C1" + tag);
    c.is(asmb.c2_ok, "C2" + tag);
    Geometry glued = button(asmb);
    c.eq(glued.points(), 2 * reg.geom(spec).points() - 1, "glued point count" + tag);

    DistanceMatrix dm(glued);
    ParapolarReport r = verify_parapolar(glued, dm);
    c.is(r.parapolar(), "glued parapolar" + tag);
    c.is(r.lacunarity.spectrum.count(0) == 1, "0 joins the spectrum" + tag);

    const ParapolarReport& sheet_rep = reg.full(spec, 0).report;
    c.eq(r.symps.size(), 2 * sheet_rep.symps.size(), "symp count doubles" + tag);
    std::multiset<int> glued_ranks, sheet_ranks;
    for (const Symp& s : r.symps) glued_ranks.insert(s.rank);
    for (const Symp& s : sheet_rep.symps) {
      sheet_ranks.insert(s.rank);
      sheet_ranks.insert(s.rank);
    }
    c.is(glued_ranks == sheet_ranks, "symp ranks preserved" + tag);

    // locally disconnected exactly at the glue class
    uint32_t glue_point = UINT32_MAX;
    for (uint32_t p = 0; p < glued.points(); ++p)
      if (glued.label(p).find('=') != std::string::npos) glue_point = p;
    c.is(glue_point != UINT32_MAX, "glue class found" + tag);
    std::vector<uint8_t> conn(glued.points(), 0);
    parallel_for(glued.points(), [&](std::size_t p) {
      Residual res = point_residual(glued, static_cast<uint32_t>(p), r.symps);
      conn[p] = res.geom.connected() ? 1 : 0;
    });
    for (uint32_t p = 0; p < glued.points(); ++p)
      if ((p == glue_point) == static_cast<bool>(conn[p]))
        c.is(false, "local connectivity wrong at point " + std::to_string(p) + tag);

    Unbuttoning ub = unbutton(glued, r.symps);
    c.eq(ub.assembly.sheets.size(), 2u, "two sheets" + tag);
    Fingerprint orig = reg.full(spec, 0).fp;
    for (const Geometry& s : ub.assembly.sheets)
      if (!(fingerprint(s) == orig)) c.is(false, "sheet fingerprint differs" + tag);

    auto parts = sheet_recovery(glued);
    c.eq(parts.size(), 2u, "line graph splits in two" + tag);
    std::size_t per_sheet = reg.geom(spec).line_count();
    for (const auto& part : parts)
      if (part.size() != per_sheet)
        c.is(false, "line component has " + std::to_string(part.size()) + " lines" + tag);
    // point unions of the parts match the unbuttoned sheets
    for (const auto& part : parts) {
      DynBitset un(glued.points());
      for (uint32_t li : part)
        for (uint32_t p : glued.lines()[li]) un.set(p);
      c.eq(un.count(), reg.geom(spec).points(), "part point union" + tag);
    }

    c.is(roundtrip_check(glued, r.symps), "roundtrip" + tag);
  }

  // C1 rejection: same-sheet self-glue on a diameter-2 sheet
  std::vector<Geometry> one{reg.geom("polar:sp:6:2")};
  SheetAssembly bad = make_assembly(std::move(one), {{{0, 0}, {0, 30}}});
  c.is(!bad.c1_ok, "self-glue violates C1");
  c.is(!bad.c1_witness.empty(), "C1 witness reported");
}

void criterion9(Checker& c) {
  std::string path = opt_data.empty() ? default_expectations_path() : opt_data;
  TableOutcome o = verify_tables(path, "", opt_stretch);
  std::cout << o.log;
  c.eq(o.failed, 0, "table rows failed");
  c.is(o.passed >= 13, "witnessed rows all ran");
  c.is(o.skipped > 0, "skip-listed rows reported");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--full")) opt_full = true;
    else if (!std::strcmp(argv[i], "--stretch")) opt_stretch = true;
    else if (!std::strcmp(argv[i], "--data") && i + 1 < argc) opt_data = argv[++i];
    else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc)
      set_thread_count(std::stoul(argv[++i]));
    else {
      std::cerr << "usage: acceptance [--full] [--stretch] [--data file] [--threads n]\n";
      return 2;
    }
  }

  struct Entry {
    int number;
    const char* title;
    std::function<void(Checker&)> run;
  };
  const Entry entries[] = {
      {1, "classical polar space counts against the oracle", criterion1},
      {2, "line grassmannian of the projective 4-space", criterion2},
      {3, "plane grassmannian of the projective 5-space", criterion3},
      {4, "dual polar space of rank 3", criterion4},
      {5, "half-spin geometry of rank 5 and its residuals", criterion5},
      {6, "product geometries", criterion6},
      {7, "structural properties over the corpus", criterion7},
      {8, "sheet assembly round trips", criterion8},
      {9, "classification table verification", criterion9},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    if (c.failures.empty()) {
      std::cout << "PASS criterion " << e.number << ": " << e.title << " (" << buf << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL criterion " << e.number << ": " << e.title << " (" << buf << ")\n";
      for (const std::string& f : c.failures) std::cout << "     - " << f << "\n";
    }
    std::cout.flush();
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  else std::cout << "all criteria passed\n";
  return failures ? 1 : 0;
}
