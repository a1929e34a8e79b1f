#include "liegeo/residual.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "liegeo/errors.hpp"
#include "liegeo/parallel.hpp"
#include "liegeo/singular.hpp"

namespace liegeo {

namespace {

// Singular planes through p: closures of coplanar pairs of lines through p.
// A pair already inside a found plane is skipped before the closure runs.
std::vector<DynBitset> planes_through(const Geometry& g, uint32_t p) {
  const auto& lt = g.lines_through(p);
  std::vector<DynBitset> planes;
  std::vector<std::vector<uint32_t>> planes_of(lt.size());
  for (std::size_t i = 0; i < lt.size(); ++i) {
    const Line& a = g.lines()[lt[i]];
    for (std::size_t j = i + 1; j < lt.size(); ++j) {
      const Line& b = g.lines()[lt[j]];
      bool known = false;
      for (uint32_t pi : planes_of[i]) {
        bool inside = true;
        for (uint32_t y : b)
          if (!planes[pi].test(y)) {
            inside = false;
            break;
          }
        if (inside) {
          known = true;
          break;
        }
      }
      if (known) continue;
      bool coplanar = true;
      for (uint32_t x : a) {
        if (x == p) continue;
        for (uint32_t y : b) {
          if (y == p) continue;
          if (x != y && !g.adjacent(x, y)) {
            coplanar = false;
            break;
          }
        }
        if (!coplanar) break;
      }
      if (!coplanar) continue;
      DynBitset seed(g.points());
      for (uint32_t x : a) seed.set(x);
      for (uint32_t y : b) seed.set(y);
      DynBitset cl = subspace_closure(g, seed);
      SingularCheck chk = is_singular(g, cl);
      if (!(chk.ok && chk.sub.projective && chk.sub.dim == 2)) continue;
      uint32_t id = static_cast<uint32_t>(planes.size());
      planes.push_back(std::move(cl));
      for (std::size_t k = 0; k < lt.size(); ++k) {
        const Line& l = g.lines()[lt[k]];
        bool inside = true;
        for (uint32_t x : l)
          if (!planes[id].test(x)) {
            inside = false;
            break;
          }
        if (inside) planes_of[k].push_back(id);
      }
    }
  }
  std::sort(planes.begin(), planes.end());
  return planes;
}

}  // namespace

Residual point_residual(const Geometry& g, uint32_t p,
                        const std::vector<Symp>& symps) {
  if (p >= g.points()) throw InputError("residual point out of range");
  Residual res;
  res.parent_point = p;
  res.parent_line = g.lines_through(p);
  std::unordered_map<uint32_t, uint32_t> line_index;
  for (std::size_t i = 0; i < res.parent_line.size(); ++i)
    line_index[res.parent_line[i]] = static_cast<uint32_t>(i);

  std::vector<const DynBitset*> symps_here;
  for (const Symp& s : symps)
    if (s.points.test(p)) symps_here.push_back(&s.points);

  std::vector<Line> rlines;
  for (const DynBitset& plane : planes_through(g, p)) {
    bool in_symp = false;
    for (const DynBitset* s : symps_here)
      if (plane.is_subset_of(*s)) {
        in_symp = true;
        break;
      }
    if (!in_symp) {
      ++res.planes_outside_symps;
      continue;
    }
    Line pencil;
    for (uint32_t li : g.lines_through(p)) {
      const Line& l = g.lines()[li];
      bool inside = true;
      for (uint32_t x : l)
        if (!plane.test(x)) {
          inside = false;
          break;
        }
      if (inside) pencil.push_back(line_index.at(li));
    }
    if (pencil.size() >= 2) {
      rlines.push_back(std::move(pencil));
      res.parent_plane.push_back(plane.to_indices());
    }
  }

  res.geom = make_geometry(res.parent_line.size(), std::move(rlines), {},
                           /*allow_uncovered=*/true);
  return res;
}

LocalConnectivity is_locally_connected(const Geometry& g,
                                       const std::vector<Symp>& symps) {
  LocalConnectivity out;
  std::size_t n = g.points();
  std::vector<uint8_t> conn(n, 0);
  parallel_for(n, [&](std::size_t p) {
    Residual r = point_residual(g, static_cast<uint32_t>(p), symps);
    conn[p] = r.geom.connected() ? 1 : 0;
  });
  for (std::size_t p = 0; p < n; ++p)
    if (!conn[p]) {
      out.witness = static_cast<uint32_t>(p);
      return out;
    }
  out.locally_connected = true;
  return out;
}

const char* component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::SingleLine: return "single-line";
    case ComponentKind::SympResidue: return "symp-residue";
    case ComponentKind::StrongParapolar: return "strong-parapolar";
    case ComponentKind::Anomalous: return "anomalous";
  }
  return "?";
}

std::vector<ComponentClass> classify_components(const Geometry& g,
                                                const Residual& res,
                                                const std::vector<Symp>& symps) {
  const Geometry& rg = res.geom;
  std::size_t n = rg.points();
  std::vector<uint32_t> comp(n, UINT32_MAX);
  uint32_t ncomp = 0;
  for (uint32_t s = 0; s < n; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    std::vector<uint32_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      uint32_t x = stack.back();
      stack.pop_back();
      rg.adj(x).for_each([&](std::size_t y) {
        if (comp[y] == UINT32_MAX) {
          comp[y] = ncomp;
          stack.push_back(static_cast<uint32_t>(y));
        }
      });
    }
    ++ncomp;
  }

  std::vector<ComponentClass> out;
  for (uint32_t c = 0; c < ncomp; ++c) {
    DynBitset pts(n);
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) pts.set(i);
    ComponentClass cc{ComponentKind::Anomalous, pts, std::nullopt};
    if (pts.count() == 1) {
      cc.kind = ComponentKind::SingleLine;
      out.push_back(std::move(cc));
      continue;
    }
    Induced sub = induced(rg, pts);
    PolarVerdict pv = verify_polar(sub.geom);
    if (pv.is_polar) {
      // check the component is the pencil of a rank >= 3 symp at the vertex
      cc.kind = ComponentKind::Anomalous;
      for (const Symp& s : symps) {
        if (s.rank < 3 || !s.points.test(res.parent_point)) continue;
        DynBitset expect(n);
        for (std::size_t i = 0; i < n; ++i) {
          const Line& l = g.lines()[res.parent_line[i]];
          bool inside = true;
          for (uint32_t x : l)
            if (!s.points.test(x)) {
              inside = false;
              break;
            }
          if (inside) expect.set(i);
        }
        if (expect == pts) {
          cc.kind = ComponentKind::SympResidue;
          break;
        }
      }
      out.push_back(std::move(cc));
      continue;
    }
    ParapolarReport rep = verify_parapolar(sub.geom);
    if (rep.parapolar() && rep.strong) {
      cc.kind = ComponentKind::StrongParapolar;
      cc.report = std::move(rep);
    }
    out.push_back(std::move(cc));
  }
  return out;
}

}  // namespace liegeo
