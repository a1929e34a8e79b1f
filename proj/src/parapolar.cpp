#include "liegeo/parapolar.hpp"

#include <algorithm>

#include "liegeo/errors.hpp"
#include "liegeo/parallel.hpp"
#include "liegeo/singular.hpp"

namespace liegeo {

std::string ParapolarReport::symp_thickness() const {
  bool thick = false, nonthick = false;
  for (const Symp& s : symps) (s.building_thick ? thick : nonthick) = true;
  if (thick && nonthick) return "mixed";
  if (thick) return "thick";
  if (nonthick) return "nonthick";
  return "none";
}

SympScan find_symps(const Geometry& g, DistanceMatrix& dm) {
  std::size_t n = g.points();
  SympScan scan;
  scan.symps_of_point.assign(n, {});

  auto covered = [&](uint32_t p, uint32_t q) {
    const auto& sp = scan.symps_of_point[p];
    for (uint32_t si : sp)
      if (scan.symps[si].points.test(q)) return true;
    return false;
  };

  // discovery pass: closures only, pruned by containment in found symps
  for (uint32_t p = 0; p < n; ++p) {
    for (uint32_t q = p + 1; q < n; ++q) {
      if (g.adjacent(p, q)) continue;
      std::size_t common = DynBitset::and_count(g.perp(p), g.perp(q));
      if (common == 0) {
        ++scan.empty_perp_pairs;
        continue;
      }
      if (common == 1) {
        ++scan.special_pairs;
        if (!scan.special_sample) scan.special_sample = {p, q};
        continue;
      }
      if (covered(p, q)) continue;
      DynBitset seed(n);
      seed.set(p);
      seed.set(q);
      Symp s;
      s.points = convex_closure(g, seed, dm);
      s.generating_pair = {p, q};
      uint32_t si = static_cast<uint32_t>(scan.symps.size());
      s.points.for_each([&](std::size_t x) { scan.symps_of_point[x].push_back(si); });
      scan.symps.push_back(std::move(s));
    }
  }

  // verification pass, parallel over symps
  std::vector<PolarVerdict> verdicts(scan.symps.size());
  parallel_for(scan.symps.size(), [&](std::size_t i) {
    verdicts[i] = verify_polar(induced(g, scan.symps[i].points).geom);
  });
  for (std::size_t i = 0; i < scan.symps.size(); ++i) {
    if (!verdicts[i].is_polar)
      throw NonPolarClosure(scan.symps[i].generating_pair.first,
                            scan.symps[i].generating_pair.second);
    scan.symps[i].rank = verdicts[i].rank;
    scan.symps[i].building_thick = verdicts[i].building_thick;
  }
  return scan;
}

LacunaritySummary lacunarity_spectrum(const Geometry& g,
                                      const std::vector<Symp>& symps) {
  LacunaritySummary out;
  for (std::size_t a = 0; a < symps.size(); ++a)
    for (std::size_t b = a + 1; b < symps.size(); ++b) {
      DynBitset meet = symps[a].points & symps[b].points;
      if (meet.none()) {
        out.disjoint_pair = true;
        continue;
      }
      SingularCheck chk = is_singular(g, meet);
      if (!chk.ok) throw IntersectionNotSingular(a, b);
      if (chk.sub.projective && chk.sub.dim)
        out.spectrum.insert(*chk.sub.dim);
      else
        out.nonprojective_intersection = true;
    }
  return out;
}

ParapolarReport verify_parapolar(const Geometry& g) {
  DistanceMatrix dm(g);
  return verify_parapolar(g, dm);
}

ParapolarReport verify_parapolar(const Geometry& g, DistanceMatrix& dm) {
  ParapolarReport r;
  std::size_t n = g.points();
  r.connected = g.connected();
  r.diameter = dm.diameter();

  // (PPS1) local condition and existence clause, one pass over lines
  bool exists = false;
  std::string exists_witness;
  for (std::size_t li = 0; li < g.line_count(); ++li) {
    const Line& l = g.lines()[li];
    DynBitset on(n);
    for (uint32_t x : l) on.set(x);
    DynBitset all = g.adj(l[0]);
    DynBitset any = g.adj(l[0]);
    for (std::size_t i = 1; i < l.size(); ++i) {
      all &= g.adj(l[i]);
      any |= g.adj(l[i]);
    }
    DynBitset ge2(n);
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j)
        ge2 |= g.adj(l[i]) & g.adj(l[j]);
    DynBitset bad = (ge2 - all) - on;
    if (bad.any() && r.pps1_local.holds) {
      r.pps1_local.holds = false;
      r.pps1_local.witness = "point " + std::to_string(bad.first()) +
                             " is collinear to some but not one or all of line " +
                             std::to_string(li);
    }
    if (!exists) {
      DynBitset none = any | on;
      for (std::size_t p = 0; p < n; ++p)
        if (!none.test(p)) {
          exists = true;
          exists_witness = "point " + std::to_string(p) +
                           " sees no point of line " + std::to_string(li);
          break;
        }
    }
  }
  if (!r.connected) {
    r.pps1_local.holds = false;
    r.pps1_local.witness = "geometry is disconnected";
  }
  r.pps1_exists.holds = exists;
  r.pps1_exists.witness =
      exists ? exists_witness : "every point is collinear to part of every line";

  // (PPS2) via symp enumeration
  SympScan scan;
  try {
    scan = find_symps(g, dm);
  } catch (const NonPolarClosure& e) {
    r.pps2.holds = false;
    r.pps2.witness = e.what();
    return r;
  }
  r.symps = std::move(scan.symps);
  r.special_pair_count = scan.special_pairs;
  r.special_pair_sample = scan.special_sample;
  r.empty_perp_pairs = scan.empty_perp_pairs;
  r.strong = r.special_pair_count == 0;
  for (const Symp& s : r.symps) r.rank_spectrum.insert(s.rank);

  // (PPS3) every line in at least one symp
  for (std::size_t li = 0; li < g.line_count(); ++li) {
    const Line& l = g.lines()[li];
    bool found = false;
    for (uint32_t si : scan.symps_of_point[l[0]]) {
      const DynBitset& sp = r.symps[si].points;
      bool inside = true;
      for (uint32_t x : l)
        if (!sp.test(x)) {
          inside = false;
          break;
        }
      if (inside) {
        found = true;
        break;
      }
    }
    if (!found) {
      r.pps3.holds = false;
      r.pps3.witness = "line " + std::to_string(li) + " lies in no symp";
      break;
    }
  }

  if (!r.symps.empty()) {
    try {
      r.lacunarity = lacunarity_spectrum(g, r.symps);
    } catch (const IntersectionNotSingular& e) {
      r.lacunarity_error = e.what();
    }
  }

  for (const SingularSubspace& m : enumerate_maximal_singulars(g)) {
    if (m.projective && m.dim)
      ++r.max_singular_dims[*m.dim];
    else
      ++r.nonprojective_maximals;
  }
  return r;
}

LacunarityVerdict is_k_lacunary(const ParapolarReport& report, int k) {
  LacunarityVerdict v;
  int minrank = report.min_rank();
  v.every_symp_has_k_dim_singular = !report.symps.empty() && minrank >= k + 1;
  if (report.symps.empty()) {
    v.reason = "no symps";
    return v;
  }
  if (minrank < k + 1) {
    v.reason = "minimum symplectic rank " + std::to_string(minrank) +
               " is below " + std::to_string(k + 1);
    return v;
  }
  if (k == -1) {
    if (report.lacunarity.disjoint_pair) {
      v.reason = "two symps are disjoint";
      return v;
    }
  } else if (report.lacunarity.spectrum.count(k)) {
    v.reason = "two symps meet in exactly a " + std::to_string(k) +
               "-dimensional singular subspace";
    return v;
  }
  v.value = true;
  v.reason = "rank and spectrum conditions hold";
  return v;
}

ImbrexVerdict is_imbrex(const Geometry& g, const ParapolarReport& report) {
  ImbrexVerdict v;
  if (!report.parapolar() || !report.strong || report.diameter != 2 ||
      report.rank_spectrum != std::set<int>{2}) {
    v.witness = "not a strong diameter-2 geometry of uniform symplectic rank 2";
    return v;
  }
  v.applicable = true;
  std::size_t n = g.points();
  const auto& symps = report.symps;
  std::vector<std::vector<uint32_t>> by_point(n);
  for (std::size_t si = 0; si < symps.size(); ++si)
    symps[si].points.for_each([&](std::size_t x) {
      by_point[x].push_back(static_cast<uint32_t>(si));
    });

  auto share_line = [&](const DynBitset& meet) {
    bool found = false;
    meet.for_each([&](std::size_t x) {
      if (found) return;
      for (uint32_t li : g.lines_through(static_cast<uint32_t>(x))) {
        const Line& l = g.lines()[li];
        bool inside = true;
        for (uint32_t y : l)
          if (!meet.test(y)) {
            inside = false;
            break;
          }
        if (inside) {
          found = true;
          return;
        }
      }
    });
    return found;
  };

  for (uint32_t p = 0; p < n; ++p) {
    const auto& sp = by_point[p];
    for (std::size_t i = 0; i < sp.size(); ++i)
      for (std::size_t j = i + 1; j < sp.size(); ++j) {
        const DynBitset& a = symps[sp[i]].points;
        const DynBitset& b = symps[sp[j]].points;
        DynBitset meet = a & b;
        if (share_line(meet)) continue;
        // hunt a line meeting both symps at points not collinear to p
        DynBitset far_a = a - g.perp(p);
        DynBitset far_b = b - g.perp(p);
        bool witnessed = false;
        far_a.for_each([&](std::size_t x) {
          if (witnessed) return;
          for (uint32_t li : g.lines_through(static_cast<uint32_t>(x))) {
            for (uint32_t y : g.lines()[li])
              if (far_b.test(y)) {
                witnessed = true;
                return;
              }
          }
        });
        if (witnessed) {
          v.value = false;
          v.witness = "symps " + std::to_string(sp[i]) + " and " +
                      std::to_string(sp[j]) + " share point " + std::to_string(p) +
                      " and meet a common line off its perp but share no line";
          return v;
        }
      }
  }
  v.value = true;
  return v;
}

KsVerdict ks_hypotheses(const Geometry& g, const ParapolarReport& report,
                        DistanceMatrix& dm) {
  KsVerdict v;
  std::size_t n = g.points();

  v.point_symp_nonempty = true;
  for (uint32_t x = 0; x < n && v.point_symp_nonempty; ++x)
    for (const Symp& s : report.symps)
      if (!g.perp(x).intersects(s.points)) {
        v.point_symp_nonempty = false;
        v.witness = "point " + std::to_string(x) + " sees no point of a symp";
        break;
      }

  v.balls_hyperplanes = true;
  for (uint32_t x = 0; x < n; ++x) {
    DynBitset ball(n);
    const auto& row = dm.row(x);
    for (std::size_t q = 0; q < n; ++q)
      if (row[q] != kUnreached && row[q] <= 2) ball.set(q);
    if (!is_geometric_hyperplane(g, ball)) {
      v.balls_hyperplanes = false;
      if (v.witness.empty())
        v.witness = "radius-2 ball around point " + std::to_string(x) +
                    " is not a geometric hyperplane";
      break;
    }
  }

  v.singulars_finite = report.nonprojective_maximals == 0;
  return v;
}

}  // namespace liegeo
