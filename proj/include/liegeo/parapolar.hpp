#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liegeo/closure.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/polar.hpp"

namespace liegeo {

/// A symplecton: the convex closure of a non-collinear pair with at least two
/// common neighbours, always a polar space in a parapolar geometry.
struct Symp {
  DynBitset points;
  int rank = 0;
  bool building_thick = false;
  std::pair<uint32_t, uint32_t> generating_pair{0, 0};
};

struct AxiomVerdict {
  bool holds = true;
  std::string witness;
};

struct LacunaritySummary {
  std::set<int> spectrum;        // projective dimensions of nonempty singular
                                 // intersections of distinct symps
  bool disjoint_pair = false;    // some pair of symps is disjoint
  bool nonprojective_intersection = false;
};

struct KsVerdict {
  bool point_symp_nonempty = false;  // x^perp meets every symp
  bool balls_hyperplanes = false;    // radius-2 balls are geometric hyperplanes
  bool singulars_finite = false;     // maximal singulars finite-dimensional
  std::string witness;
};

struct ParapolarReport {
  bool connected = false;
  int diameter = kInfDistance;
  AxiomVerdict pps1_local;   // collinear to none, one or all
  AxiomVerdict pps1_exists;  // some (p, L) with no collinear point
  AxiomVerdict pps2;         // qualifying closures are polar
  AxiomVerdict pps3;         // every line in a symp
  std::vector<Symp> symps;
  std::size_t special_pair_count = 0;
  std::optional<std::pair<uint32_t, uint32_t>> special_pair_sample;
  std::size_t empty_perp_pairs = 0;
  bool strong = false;
  std::set<int> rank_spectrum;
  LacunaritySummary lacunarity;
  std::string lacunarity_error;  // set when symp intersections are inconsistent
  std::map<int, std::size_t> max_singular_dims;  // dim -> count of maximals
  std::size_t nonprojective_maximals = 0;

  bool parapolar() const {
    return connected && pps1_local.holds && pps1_exists.holds && pps2.holds &&
           pps3.holds;
  }
  int min_rank() const {
    return rank_spectrum.empty() ? 0 : *rank_spectrum.begin();
  }
  std::string symp_thickness() const;  // "thick", "nonthick", "mixed", "none"
};

/// Convex closures of all qualifying non-collinear pairs, deduplicated;
/// special pairs and empty-perp pairs are tallied on the side. Throws
/// NonPolarClosure when a qualifying closure fails the polar axioms.
struct SympScan {
  std::vector<Symp> symps;
  std::size_t special_pairs = 0;
  std::optional<std::pair<uint32_t, uint32_t>> special_sample;
  std::size_t empty_perp_pairs = 0;
  std::vector<std::vector<uint32_t>> symps_of_point;
};
SympScan find_symps(const Geometry& g, DistanceMatrix& dm);

ParapolarReport verify_parapolar(const Geometry& g);
ParapolarReport verify_parapolar(const Geometry& g, DistanceMatrix& dm);

/// Intersection dimensions over all pairs of distinct symps. Throws
/// IntersectionNotSingular when an intersection is not singular.
LacunaritySummary lacunarity_spectrum(const Geometry& g,
                                      const std::vector<Symp>& symps);

struct LacunarityVerdict {
  bool value = false;
  std::string reason;
  bool every_symp_has_k_dim_singular = false;
};
/// k-lacunary: all symps have rank >= k+1 and no two symps meet in exactly a
/// k-dimensional singular subspace. k = -1 reads the dimension of an empty
/// intersection as -1.
LacunarityVerdict is_k_lacunary(const ParapolarReport& report, int k);

struct ImbrexVerdict {
  bool applicable = false;
  bool value = false;
  std::string witness;
};
/// For strong diameter-2 geometries of uniform symplectic rank 2: any two
/// symps sharing a point p and both meeting some line at points not collinear
/// to p must share a line.
ImbrexVerdict is_imbrex(const Geometry& g, const ParapolarReport& report);

KsVerdict ks_hypotheses(const Geometry& g, const ParapolarReport& report,
                        DistanceMatrix& dm);

}  // namespace liegeo
