#include "liegeo/polar.hpp"

#include <algorithm>
#include <unordered_set>

#include "liegeo/closure.hpp"
#include "liegeo/errors.hpp"

namespace liegeo {

PolarVerdict verify_polar(const Geometry& g) {
  PolarVerdict v;
  std::size_t n = g.points();
  if (n == 0) {
    v.failures.emplace_back("PS2", "empty geometry");
    return v;
  }

  v.thick_lines = true;
  for (std::size_t li = 0; li < g.line_count(); ++li)
    if (g.lines()[li].size() < 3) {
      v.thick_lines = false;
      v.failures.emplace_back("PS1", "line " + std::to_string(li) + " has only " +
                                          std::to_string(g.lines()[li].size()) +
                                          " points");
      break;
    }

  for (uint32_t p = 0; p < n; ++p)
    if (g.degree(p) == n - 1) {
      v.failures.emplace_back("PS2", "point " + std::to_string(p) +
                                         " is collinear to all others");
      break;
    }

  // (PS4): for x off a line L, x is collinear to one or all points of L.
  for (std::size_t li = 0; li < g.line_count() && v.failures.size() < 8; ++li) {
    const Line& l = g.lines()[li];
    DynBitset on(n);
    for (uint32_t x : l) on.set(x);
    DynBitset all = g.adj(l[0]);
    DynBitset any = g.adj(l[0]);
    for (std::size_t i = 1; i < l.size(); ++i) {
      all &= g.adj(l[i]);
      any |= g.adj(l[i]);
    }
    // violators: off the line, collinear to >= 2 but not all points
    DynBitset ge2(n);
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j)
        ge2 |= g.adj(l[i]) & g.adj(l[j]);
    DynBitset bad = (ge2 - all) - on;
    DynBitset zero = any;  // points collinear to none violate PS4 as well
    if (bad.any()) {
      v.failures.emplace_back("PS4", "point " + std::to_string(bad.first()) +
                                         " sees part of line " + std::to_string(li));
      continue;
    }
    // collinear-to-none points: complement of (any | on)
    for (std::size_t p = 0; p < n; ++p)
      if (!zero.test(p) && !on.test(p)) {
        v.failures.emplace_back("PS4", "point " + std::to_string(p) +
                                           " sees nothing of line " + std::to_string(li));
        break;
      }
  }

  if (!v.thick_lines) { /* PS1 failure already logged */ }
  if (!v.failures.empty()) return v;

  v.maximal_singulars = enumerate_maximal_singulars(g);
  if (v.maximal_singulars.empty()) {
    v.failures.emplace_back("rank", "no maximal singular subspaces found");
    return v;
  }
  int maxdim = -1;
  bool uniform = true;
  for (const auto& m : v.maximal_singulars) {
    if (!m.projective || !m.dim) {
      v.failures.emplace_back("rank", "maximal singular subspace is not projective");
      return v;
    }
    if (maxdim == -1) maxdim = *m.dim;
    else if (*m.dim != maxdim) uniform = false;
    maxdim = std::max(maxdim, *m.dim);
  }
  if (!uniform) {
    v.failures.emplace_back("rank", "maximal singular dimensions are not uniform");
    return v;
  }
  v.rank = maxdim + 1;
  if (v.rank < 2) {
    v.failures.emplace_back("rank", "rank below 2");
    return v;
  }

  // Building thickness: every next-to-maximal singular subspace lies in at
  // least 3 maximal ones. Candidates arise as x^perp meet M, which is a
  // hyperplane of the projective space M for every x off M.
  std::unordered_set<DynBitset, DynBitset::Hash> hyperplanes;
  for (const auto& m : v.maximal_singulars) {
    for (std::size_t x = 0; x < n; ++x) {
      if (m.points.test(x)) continue;
      DynBitset h = g.perp(static_cast<uint32_t>(x)) & m.points;
      if (h.any() && h.count() < m.points.count()) hyperplanes.insert(std::move(h));
    }
  }
  v.building_thick = !hyperplanes.empty();
  for (const DynBitset& h : hyperplanes) {
    std::size_t over = 0;
    for (const auto& m : v.maximal_singulars)
      if (h.is_subset_of(m.points)) ++over;
    if (over < 3) {
      v.building_thick = false;
      break;
    }
  }

  v.is_polar = true;
  return v;
}

std::vector<DynBitset> singular_subspaces_of_polar(const Geometry& g, int rank,
                                                   int k) {
  if (k < 1 || k > rank) throw InputError("k out of range for rank " + std::to_string(rank));
  if (k == 1) {
    std::vector<DynBitset> out;
    out.reserve(g.points());
    for (std::size_t p = 0; p < g.points(); ++p) {
      DynBitset b(g.points());
      b.set(p);
      out.push_back(std::move(b));
    }
    return out;
  }
  return singular_subspaces_of_dim(g, k - 1);
}

}  // namespace liegeo
