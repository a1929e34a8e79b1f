#include <doctest.h>

#include "liegeo/analysis.hpp"
#include "liegeo/construct.hpp"
#include "liegeo/parapolar.hpp"

using namespace liegeo;

namespace {

ParapolarReport report_of(const char* spec) {
  return verify_parapolar(build_construction(spec));
}

bool k_lac(const ParapolarReport& r, int k) { return is_k_lacunary(r, k).value; }

}  // namespace

TEST_CASE("the line grassmannian of PG(4,2)") {
  Geometry g = build_construction("A:4:2:2");
  ParapolarReport r = verify_parapolar(g);
  REQUIRE(r.parapolar());
  CHECK(r.strong);
  CHECK(r.diameter == 2);
  CHECK(r.rank_spectrum == std::set<int>{3});
  CHECK(r.symps.size() == 31);  // the solids of PG(4,2)
  for (const Symp& s : r.symps) {
    CHECK(s.points.count() == 35);
    CHECK_FALSE(s.building_thick);
  }
  CHECK(r.lacunarity.spectrum == std::set<int>{2});
  CHECK_FALSE(r.lacunarity.disjoint_pair);
  CHECK(k_lac(r, -1));
  CHECK(k_lac(r, 0));
  CHECK(k_lac(r, 1));
  CHECK_FALSE(k_lac(r, 2));
  // maximal singulars: 155 dual planes and 31 point-stars, all projective
  CHECK(r.max_singular_dims ==
        std::map<int, std::size_t>{{2, 155}, {3, 31}});
  CHECK(r.nonprojective_maximals == 0);
}

TEST_CASE("polar spaces are not parapolar") {
  ParapolarReport r = report_of("polar:sp:6:2");
  CHECK_FALSE(r.parapolar());
  CHECK_FALSE(r.pps1_exists.holds);  // every point sees part of every line
  CHECK(r.symps.size() == 1);        // one symp: the whole space
  CHECK(r.symps[0].points.count() == 63);
}

TEST_CASE("projective spaces are not parapolar") {
  ParapolarReport r = report_of("A:3:1:2");
  CHECK_FALSE(r.parapolar());
  CHECK_FALSE(r.pps1_exists.holds);
  CHECK(r.diameter == 1);
}

TEST_CASE("the dual polar space of W(5,2)") {
  ParapolarReport r = report_of("dualpolar:sp:6:2");
  REQUIRE(r.parapolar());
  CHECK(r.strong);
  CHECK(r.diameter == 3);
  CHECK(r.rank_spectrum == std::set<int>{2});
  CHECK(r.symps.size() == 63);  // quads, one per point of W(5,2)
  CHECK(r.symp_thickness() == "thick");
  CHECK(r.lacunarity.spectrum == std::set<int>{1});
  CHECK(r.lacunarity.disjoint_pair);
  CHECK(k_lac(r, 0));
  CHECK_FALSE(k_lac(r, -1));
  CHECK_FALSE(k_lac(r, 1));  // strong with minimum rank 2, never 1-lacunary
}

TEST_CASE("products of a thick line with a polar space") {
  Geometry g = build_construction("prod:(line:3)x(polar:sp:6:2)");
  ParapolarReport r = verify_parapolar(g);
  REQUIRE(r.parapolar());
  CHECK(r.strong);
  CHECK(r.diameter == 3);  // 1 + 2
  CHECK(r.symps.size() == 318);  // 3 copies of the polar space + 315 grids
  CHECK(r.rank_spectrum == std::set<int>{2, 3});
  CHECK(r.symp_thickness() == "mixed");
  CHECK(k_lac(r, 0));
  CHECK_FALSE(k_lac(r, -1));  // two polar copies are disjoint
  CHECK_FALSE(k_lac(r, 1));
  std::size_t rank3 = 0;
  for (const Symp& s : r.symps)
    if (s.rank == 3) {
      ++rank3;
      CHECK(s.points.count() == 63);
      CHECK(s.building_thick);
    }
  CHECK(rank3 == 3);
}

TEST_CASE("the segre geometry of two planes") {
  Geometry g = build_construction("prod:(A:2:1:2)x(A:2:1:2)");
  ParapolarReport r = verify_parapolar(g);
  REQUIRE(r.parapolar());
  CHECK(r.strong);
  CHECK(r.diameter == 2);
  CHECK(r.symps.size() == 49);  // line pairs, one grid each
  CHECK(r.rank_spectrum == std::set<int>{2});
  // two grids over the same line of one factor share a full line, two grids
  // in general position share exactly one point; no pair is disjoint
  CHECK(r.lacunarity.spectrum == std::set<int>{0, 1});
  CHECK_FALSE(r.lacunarity.disjoint_pair);
  CHECK(k_lac(r, -1));
  CHECK_FALSE(k_lac(r, 0));
  CHECK_FALSE(k_lac(r, 1));
  CHECK(r.max_singular_dims == std::map<int, std::size_t>{{2, 14}});
}

TEST_CASE("imbrex predicate") {
  Geometry segre = build_construction("prod:(A:2:1:2)x(A:2:1:2)");
  DistanceMatrix dm_s(segre);
  ParapolarReport rs = verify_parapolar(segre, dm_s);
  ImbrexVerdict vs = is_imbrex(segre, rs);
  CHECK(vs.applicable);
  CHECK(vs.value);

  Geometry cp = build_construction("prod:(line:3)x(A:2:1:2)");
  DistanceMatrix dm_c(cp);
  ParapolarReport rc = verify_parapolar(cp, dm_c);
  ImbrexVerdict vc = is_imbrex(cp, rc);
  CHECK(vc.applicable);
  CHECK(vc.value);

  // a bare grid is not parapolar, so the predicate is not applicable
  Geometry grid = build_construction("prod:(line:3)x(line:3)");
  DistanceMatrix dm_g(grid);
  ParapolarReport rg = verify_parapolar(grid, dm_g);
  ImbrexVerdict vg = is_imbrex(grid, rg);
  CHECK_FALSE(vg.applicable);
}

TEST_CASE("kasikova-shult hypotheses") {
  // dual polar space of rank 3: all three conditions hold
  Geometry dw = build_construction("dualpolar:sp:6:2");
  DistanceMatrix dm(dw);
  ParapolarReport r = verify_parapolar(dw, dm);
  KsVerdict v = ks_hypotheses(dw, r, dm);
  CHECK(v.point_symp_nonempty);
  CHECK(v.balls_hyperplanes);
  CHECK(v.singulars_finite);

  // diameter-2 space: radius-2 balls are improper, condition 2 fails; a
  // point off both factor lines of a grid symp sees none of it, so the
  // nonempty-perp condition fails here too
  Geometry segre = build_construction("prod:(A:2:1:2)x(A:2:1:2)");
  DistanceMatrix dm_s(segre);
  ParapolarReport rs = verify_parapolar(segre, dm_s);
  KsVerdict vs = ks_hypotheses(segre, rs, dm_s);
  CHECK_FALSE(vs.point_symp_nonempty);
  CHECK_FALSE(vs.balls_hyperplanes);
  CHECK(vs.singulars_finite);
}

TEST_CASE("every line lies in a symp and symps are unique per pair") {
  for (const char* spec : {"A:4:2:2", "dualpolar:sp:6:2",
                           "prod:(A:2:1:2)x(A:2:1:2)",
                           "prod:(line:3)x(A:2:1:2)"}) {
    CAPTURE(spec);
    Geometry g = build_construction(spec);
    ParapolarReport r = verify_parapolar(g);
    REQUIRE(r.parapolar());
    CHECK(r.pps3.holds);
    // no two distinct symps share a non-collinear pair
    for (std::size_t a = 0; a < r.symps.size(); ++a)
      for (std::size_t b = a + 1; b < r.symps.size(); ++b) {
        DynBitset meet = r.symps[a].points & r.symps[b].points;
        auto idx = meet.to_indices();
        for (std::size_t i = 0; i < idx.size(); ++i)
          for (std::size_t j = i + 1; j < idx.size(); ++j)
            CHECK(g.adjacent(idx[i], idx[j]));
      }
  }
}

TEST_CASE("symps equal their own convex closure and pass the polar check") {
  Geometry g = build_construction("A:4:2:2");
  DistanceMatrix dm(g);
  ParapolarReport r = verify_parapolar(g, dm);
  for (const Symp& s : r.symps) {
    CHECK(convex_closure(g, s.points, dm) == s.points);
    PolarVerdict pv = verify_polar(induced(g, s.points).geom);
    CHECK(pv.is_polar);
    CHECK(pv.rank == s.rank);
  }
  // the induced symp geometry has the line count of the Klein quadric
  Induced sub = induced(g, r.symps[0].points);
  CHECK(sub.geom.points() == 35);
  CHECK(sub.geom.line_count() == 105);
}

TEST_CASE("strong minimum-rank-2 geometries are never 1-lacunary") {
  for (const char* spec : {"dualpolar:sp:6:2", "prod:(A:2:1:2)x(A:2:1:2)",
                           "prod:(line:3)x(A:2:1:2)",
                           "prod:(line:3)x(polar:sp:6:2)",
                           "prod:(line:3)x(prod:(line:3)x(line:3))"}) {
    CAPTURE(spec);
    ParapolarReport r = report_of(spec);
    REQUIRE(r.parapolar());
    REQUIRE(r.strong);
    REQUIRE(r.min_rank() == 2);
    CHECK_FALSE(k_lac(r, 1));
  }
}

TEST_CASE("zero-lacunary geometries are strong with diameter at most 3") {
  for (const char* spec : {"A:4:2:2", "dualpolar:sp:6:2",
                           "prod:(line:3)x(polar:sp:6:2)",
                           "prod:(line:3)x(prod:(line:3)x(line:3))"}) {
    CAPTURE(spec);
    ParapolarReport r = report_of(spec);
    REQUIRE(r.parapolar());
    REQUIRE(k_lac(r, 0));
    CHECK(r.strong);
    CHECK(r.diameter <= 3);
  }
}

TEST_CASE("uniform-rank instances: small singulars lie in symps") {
  Geometry g = build_construction("A:4:2:2");
  ParapolarReport r = verify_parapolar(g);
  int d = *r.rank_spectrum.begin();
  for (int dim = 1; dim <= d - 1; ++dim) {
    for (const DynBitset& s : singular_subspaces_of_dim(g, dim)) {
      bool inside = false;
      for (const Symp& sy : r.symps)
        if (s.is_subset_of(sy.points)) {
          inside = true;
          break;
        }
      CHECK(inside);
    }
  }
}
