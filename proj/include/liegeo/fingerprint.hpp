#pragma once

#include <map>
#include <string>

#include "liegeo/geometry.hpp"
#include "liegeo/parapolar.hpp"

namespace liegeo {

/// Invariant summary used to compare geometries. Equal fingerprints are
/// necessary but not sufficient for isomorphism.
struct Fingerprint {
  std::size_t points = 0;
  std::size_t lines = 0;
  std::map<std::size_t, std::size_t> line_sizes;  // size -> count
  std::map<std::size_t, std::size_t> degrees;     // degree -> count
  int diameter = 0;                               // kInfDistance if disconnected
  std::map<int, std::size_t> symp_ranks;          // rank -> count
  std::map<int, std::size_t> max_singular_dims;   // dim -> count
  bool strong = false;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const Geometry& g, const ParapolarReport& report);
Fingerprint fingerprint(const Geometry& g);

/// Exact isomorphism of the bipartite point-line incidence graphs, by
/// iterative colour refinement with individualization and backtracking.
/// Throws SizeExceeded when the combined vertex count is over the cap.
bool exact_iso_small(const Geometry& a, const Geometry& b,
                     std::size_t max_vertices = 5000);

}  // namespace liegeo
