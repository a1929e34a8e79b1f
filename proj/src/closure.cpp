#include "liegeo/closure.hpp"

#include <algorithm>

#include "liegeo/errors.hpp"
#include "liegeo/parallel.hpp"

namespace liegeo {

std::vector<uint8_t> bfs_row(const Geometry& g, uint32_t src) {
  std::size_t n = g.points();
  std::vector<uint8_t> dist(n, kUnreached);
  DynBitset seen(n), frontier(n);
  seen.set(src);
  frontier.set(src);
  dist[src] = 0;
  for (uint8_t d = 1; ; ++d) {
    DynBitset next(n);
    frontier.for_each([&](std::size_t p) { next |= g.adj(static_cast<uint32_t>(p)); });
    next -= seen;
    if (next.none()) break;
    next.for_each([&](std::size_t p) { dist[p] = d; });
    seen |= next;
    frontier = std::move(next);
    if (d == 0xfe) break;  // geometries here have tiny diameter
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Geometry& g) : n_(g.points()), empty_(g.points()) {
  rows_.resize(n_);
  levels_.resize(n_);
  parallel_for(n_, [&](std::size_t p) { rows_[p] = bfs_row(g, static_cast<uint32_t>(p)); });
}

const DynBitset& DistanceMatrix::level(uint32_t p, int k) {
  auto& lv = levels_[p];
  if (lv.empty()) {
    int top = 0;
    for (const uint8_t d : rows_[p])
      if (d != kUnreached && d > top) top = d;
    lv.assign(static_cast<std::size_t>(top) + 1, DynBitset(n_));
    for (std::size_t q = 0; q < n_; ++q) {
      uint8_t d = rows_[p][q];
      if (d != kUnreached) lv[d].set(q);
    }
  }
  if (k < 0 || static_cast<std::size_t>(k) >= lv.size()) return empty_;
  return lv[static_cast<std::size_t>(k)];
}

int DistanceMatrix::eccentricity(uint32_t p) const {
  int m = 0;
  for (uint8_t d : rows_[p]) {
    if (d == kUnreached) return kInfDistance;
    m = std::max<int>(m, d);
  }
  return m;
}

int DistanceMatrix::diameter() const {
  int m = 0;
  for (std::size_t p = 0; p < n_; ++p) {
    int e = eccentricity(static_cast<uint32_t>(p));
    if (e == kInfDistance) return kInfDistance;
    m = std::max(m, e);
  }
  return m;
}

int distance(const Geometry& g, uint32_t p, uint32_t q) {
  uint8_t d = bfs_row(g, p)[q];
  return d == kUnreached ? kInfDistance : d;
}

int diameter(const Geometry& g) {
  int m = 0;
  for (std::size_t p = 0; p < g.points(); ++p) {
    auto row = bfs_row(g, static_cast<uint32_t>(p));
    for (uint8_t d : row) {
      if (d == kUnreached) return kInfDistance;
      m = std::max<int>(m, d);
    }
  }
  return m;
}

DynBitset subspace_closure(const Geometry& g, const DynBitset& seed) {
  DynBitset s = seed;
  std::vector<uint32_t> queue = seed.to_indices();
  while (!queue.empty()) {
    uint32_t p = queue.back();
    queue.pop_back();
    for (uint32_t li : g.lines_through(p)) {
      const Line& l = g.lines()[li];
      std::size_t in = 0;
      for (uint32_t x : l)
        if (s.test(x)) ++in;
      if (in < 2 || in == l.size()) continue;
      for (uint32_t x : l)
        if (!s.test(x)) {
          s.set(x);
          queue.push_back(x);
        }
    }
  }
  return s;
}

namespace {

// Inserts all points on geodesics between x and y into acc. Levels come from
// the shared distance cache; distances >= kUnreached never occur inside one
// component at these diameters.
void geodesic_points(DistanceMatrix& dm, uint32_t x, uint32_t y, int d,
                     DynBitset& acc) {
  for (int k = 1; k < d; ++k) acc |= dm.level(x, k) & dm.level(y, d - k);
}

}  // namespace

DynBitset convex_closure(const Geometry& g, const DynBitset& seed,
                         DistanceMatrix& dm) {
  DynBitset s = subspace_closure(g, seed);
  std::vector<uint32_t> fresh = s.to_indices();
  std::vector<uint32_t> members;
  while (!fresh.empty()) {
    DynBitset add(g.points());
    for (uint32_t x : fresh) {
      for (uint32_t y : members) {
        int d = dm.dist(x, y);
        if (d >= 2 && d != kInfDistance) geodesic_points(dm, x, y, d, add);
      }
      for (uint32_t y : fresh) {
        if (y <= x) continue;
        int d = dm.dist(x, y);
        if (d >= 2 && d != kInfDistance) geodesic_points(dm, x, y, d, add);
      }
    }
    members.insert(members.end(), fresh.begin(), fresh.end());
    add -= s;
    if (add.none()) break;
    DynBitset grown = s | add;
    grown = subspace_closure(g, grown);
    DynBitset delta = grown - s;
    s = std::move(grown);
    fresh = delta.to_indices();
  }
  return s;
}

DynBitset convex_closure(const Geometry& g, const DynBitset& seed) {
  DistanceMatrix dm(g);
  return convex_closure(g, seed, dm);
}

bool is_subspace(const Geometry& g, const DynBitset& s) {
  // a violating line has >= 2 members, so scanning lines through members
  // suffices; a line is inspected once per member but the test is cheap
  bool ok = true;
  s.for_each([&](std::size_t p) {
    if (!ok) return;
    for (uint32_t li : g.lines_through(static_cast<uint32_t>(p))) {
      const Line& l = g.lines()[li];
      std::size_t in = 0;
      for (uint32_t x : l)
        if (s.test(x)) ++in;
      if (in >= 2 && in != l.size()) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool is_geometric_hyperplane(const Geometry& g, const DynBitset& s) {
  if (s.count() == g.points()) return false;
  for (const Line& l : g.lines()) {
    std::size_t in = 0;
    for (uint32_t x : l)
      if (s.test(x)) ++in;
    if (in == 0) return false;
    if (in >= 2 && in != l.size()) return false;
  }
  return true;
}

}  // namespace liegeo
