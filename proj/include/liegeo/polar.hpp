#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liegeo/geometry.hpp"
#include "liegeo/singular.hpp"

namespace liegeo {

/// Outcome of the polar-space axiom check (PS1)-(PS4). PS3, every nested
/// chain of singular subspaces being finite, holds automatically for finite
/// geometries and is recorded as such.
struct PolarVerdict {
  bool is_polar = false;
  int rank = 0;                // 1 + max dimension of maximal singulars
  bool thick_lines = false;    // (PS1): every line has >= 3 points
  bool building_thick = false; // >= 3 maximal singulars over each next-to-maximal
  std::vector<std::pair<std::string, std::string>> failures;  // (axiom, witness)
  std::vector<SingularSubspace> maximal_singulars;
};

PolarVerdict verify_polar(const Geometry& g);

/// Singular subspaces of projective dimension k-1 of a verified polar space,
/// 1 <= k <= rank. k = 1 gives the points.
std::vector<DynBitset> singular_subspaces_of_polar(const Geometry& g, int rank,
                                                   int k);

}  // namespace liegeo
