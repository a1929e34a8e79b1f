#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "liegeo/geometry.hpp"

namespace liegeo {

constexpr int kInfDistance = std::numeric_limits<int>::max();
constexpr uint8_t kUnreached = 0xff;

/// BFS distance row from src; kUnreached marks other components.
std::vector<uint8_t> bfs_row(const Geometry& g, uint32_t src);

/// All-pairs distances in the collinearity graph; rows computed in parallel.
class DistanceMatrix {
public:
  explicit DistanceMatrix(const Geometry& g);

  int dist(uint32_t p, uint32_t q) const {
    uint8_t d = rows_[p][q];
    return d == kUnreached ? kInfDistance : d;
  }
  const std::vector<uint8_t>& row(uint32_t p) const { return rows_[p]; }

  /// Points at exact distance k from p, cached per point.
  const DynBitset& level(uint32_t p, int k);

  int diameter() const;  // kInfDistance when disconnected
  int eccentricity(uint32_t p) const;

private:
  std::size_t n_;
  DynBitset empty_;
  std::vector<std::vector<uint8_t>> rows_;
  std::vector<std::vector<DynBitset>> levels_;
};

int distance(const Geometry& g, uint32_t p, uint32_t q);
int diameter(const Geometry& g);

/// Smallest subspace containing the seed: whenever two collinear points are
/// in, every line through both is in. Work-queue fixpoint.
DynBitset subspace_closure(const Geometry& g, const DynBitset& seed);

/// Smallest convex subspace containing the seed: alternates insertion of all
/// points on geodesics between members with subspace closure until stable.
DynBitset convex_closure(const Geometry& g, const DynBitset& seed,
                         DistanceMatrix& dm);
DynBitset convex_closure(const Geometry& g, const DynBitset& seed);

/// Subspace test: every line with two points in S lies inside S.
bool is_subspace(const Geometry& g, const DynBitset& s);

/// Proper subspace meeting every line.
bool is_geometric_hyperplane(const Geometry& g, const DynBitset& s);

}  // namespace liegeo
