#include <doctest.h>

#include "liegeo/assembly.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/construct.hpp"
#include "liegeo/fingerprint.hpp"

using namespace liegeo;

namespace {

// two copies of a geometry glued at one point each
SheetAssembly double_glued(const char* spec, uint32_t pa, uint32_t pb) {
  std::vector<Geometry> sheets{build_construction(spec), build_construction(spec)};
  return make_assembly(std::move(sheets), {{{0, pa}, {1, pb}}});
}

}  // namespace

TEST_CASE("two polar sheets glued at one point") {
  SheetAssembly a = double_glued("polar:sp:6:2", 0, 0);
  CHECK(a.c1_ok);
  CHECK(a.c2_ok);
  CHECK_FALSE(a.trivial_relation());

  Geometry g = button(a);
  CHECK(g.points() == 125);  // 63 + 63 - 1
  ParapolarReport r = verify_parapolar(g);
  REQUIRE(r.parapolar());
  CHECK(r.symps.size() == 2);
  CHECK(r.rank_spectrum == std::set<int>{3});
  CHECK(r.lacunarity.spectrum == std::set<int>{0});
  CHECK_FALSE(r.lacunarity.disjoint_pair);
  CHECK(is_k_lacunary(r, 0).value == false);
  CHECK(is_k_lacunary(r, 1).value);  // rank 3, no dim-1 intersections

  // locally disconnected exactly at the glue class
  LocalConnectivity lc = is_locally_connected(g, r.symps);
  CHECK_FALSE(lc.locally_connected);
  REQUIRE(lc.witness.has_value());
  CHECK(g.label(*lc.witness).find('=') != std::string::npos);
}

TEST_CASE("self-glue on a diameter-2 sheet violates C1") {
  std::vector<Geometry> sheets{build_construction("polar:sp:6:2")};
  SheetAssembly a = make_assembly(std::move(sheets), {{{0, 0}, {0, 7}}});
  CHECK_FALSE(a.c1_ok);
  CHECK(!a.c1_witness.empty());
  CHECK_THROWS_AS(button(a), C1Violation);
}

TEST_CASE("two glue classes too close together violate C1") {
  // distance(p1,q1) + distance(q2,p2) <= 4 across two classes
  std::vector<Geometry> sheets{build_construction("polar:sp:6:2"),
                               build_construction("polar:sp:6:2")};
  SheetAssembly a = make_assembly(std::move(sheets),
                                  {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}});
  CHECK_FALSE(a.c1_ok);
}

TEST_CASE("disconnected sheet graph violates C2") {
  std::vector<Geometry> sheets{build_construction("polar:sp:6:2"),
                               build_construction("polar:sp:6:2")};
  SheetAssembly a = make_assembly(std::move(sheets), {});
  CHECK(a.c1_ok);
  CHECK_FALSE(a.c2_ok);
  CHECK_THROWS_AS(button(a), C2Violation);
}

TEST_CASE("chain of three sheets glued pairwise") {
  std::vector<Geometry> sheets{build_construction("polar:sp:6:2"),
                               build_construction("polar:sp:6:2"),
                               build_construction("polar:sp:6:2")};
  // glue points non-collinear inside the middle sheet: 0 and its first
  // non-neighbour
  Geometry w = build_construction("polar:sp:6:2");
  uint32_t far = 0;
  for (uint32_t q = 1; q < w.points(); ++q)
    if (!w.adjacent(0, q)) {
      far = q;
      break;
    }
  SheetAssembly a = make_assembly(std::move(sheets),
                                  {{{0, 0}, {1, 0}}, {{1, far}, {2, 0}}});
  CHECK(a.c1_ok);
  CHECK(a.c2_ok);
  Geometry g = button(a);
  CHECK(g.points() == 3 * 63 - 2);
  ParapolarReport r = verify_parapolar(g);
  CHECK(r.parapolar());
  CHECK(r.symps.size() == 3);
}

TEST_CASE("complete triangle of polar sheets meets every pair of symps") {
  Geometry w = build_construction("polar:sp:6:2");
  uint32_t far = 0;
  for (uint32_t q = 1; q < w.points(); ++q)
    if (!w.adjacent(0, q)) {
      far = q;
      break;
    }
  std::vector<Geometry> sheets{w, w, w};
  SheetAssembly a = make_assembly(
      std::move(sheets),
      {{{0, 0}, {1, far}}, {{1, 0}, {2, far}}, {{2, 0}, {0, far}}});
  REQUIRE(a.c1_ok);
  REQUIRE(a.c2_ok);
  Geometry g = button(a);
  ParapolarReport r = verify_parapolar(g);
  REQUIRE(r.parapolar());
  CHECK(r.symps.size() == 3);
  CHECK_FALSE(r.lacunarity.disjoint_pair);           // sheet graph complete
  CHECK(is_k_lacunary(r, -1).value);                 // every pair meets
  CHECK(r.lacunarity.spectrum == std::set<int>{0});  // in exactly a point
}

TEST_CASE("unbutton recovers the sheets of a glued double") {
  SheetAssembly glued = double_glued("polar:sp:6:2", 0, 0);
  Geometry g = button(glued);
  ParapolarReport r = verify_parapolar(g);
  Unbuttoning ub = unbutton(g, r.symps);
  REQUIRE(ub.assembly.sheets.size() == 2);
  Fingerprint w = fingerprint(build_construction("polar:sp:6:2"));
  for (const Geometry& s : ub.assembly.sheets) CHECK(fingerprint(s) == w);
  std::size_t nontrivial = 0;
  for (const auto& c : ub.assembly.classes)
    if (c.size() > 1) ++nontrivial;
  CHECK(nontrivial == 1);
}

TEST_CASE("unbuttoning a locally connected geometry is trivial") {
  Geometry g = build_construction("A:4:2:2");
  ParapolarReport r = verify_parapolar(g);
  Unbuttoning ub = unbutton(g, r.symps);
  CHECK(ub.assembly.sheets.size() == 1);
  CHECK(ub.assembly.trivial_relation());
  CHECK(roundtrip_check(g, r.symps));
}

TEST_CASE("rank-2 symps block the unbuttoning") {
  Geometry g = build_construction("prod:(line:3)x(A:2:1:2)");
  ParapolarReport r = verify_parapolar(g);
  CHECK_THROWS_AS(unbutton(g, r.symps), RankTooLow);
}

TEST_CASE("roundtrip through unbutton and button") {
  SheetAssembly glued = double_glued("polar:sp:6:2", 3, 11);
  Geometry g = button(glued);
  ParapolarReport r = verify_parapolar(g);
  CHECK(roundtrip_check(g, r.symps));
}

TEST_CASE("lifted lines stay pairwise distinct") {
  SheetAssembly glued = double_glued("polar:sp:6:2", 0, 0);
  Geometry g = button(glued);
  // every sheet line appears exactly once
  CHECK(g.line_count() == 630);
}

TEST_CASE("sheet recovery by the plane-sharing line graph") {
  SheetAssembly glued = double_glued("polar:sp:6:2", 0, 0);
  Geometry g = button(glued);
  auto parts = sheet_recovery(g);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 315);
  CHECK(parts[1].size() == 315);

  // single-sheet case: one part
  Geometry a42 = build_construction("A:4:2:2");
  CHECK(sheet_recovery(a42).size() == 1);
}

TEST_CASE("collinearity in the unbuttoning") {
  // (p1,c1) and (p2,c2) collinear exactly when p1, p2 are collinear and the
  // joining line lies in both components
  SheetAssembly glued = double_glued("polar:sp:6:2", 0, 0);
  Geometry g = button(glued);
  ParapolarReport r = verify_parapolar(g);
  Unbuttoning ub = unbutton(g, r.symps);
  const SheetAssembly& a = ub.assembly;
  // the two copies of the glue point live on different sheets and are not
  // collinear in the unbuttoning even though they share the first coordinate
  std::vector<SheetPoint> glue_class;
  for (const auto& c : a.classes)
    if (c.size() == 2) glue_class = c;
  REQUIRE(glue_class.size() == 2);
  CHECK(glue_class[0].sheet != glue_class[1].sheet);
}

TEST_CASE("asm files round-trip through the reader") {
  std::string text =
      "asm 1\n"
      "sheet polar:sp:6:2\n"
      "sheet polar:sp:6:2\n"
      "glue: (0 0) = (1 0)\n";
  SheetAssembly a = read_asm(text);
  CHECK(a.sheets.size() == 2);
  CHECK(a.c1_ok);
  CHECK(a.c2_ok);
  Geometry g = button(a);
  CHECK(g.points() == 125);
}
