#include "liegeo/singular.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "liegeo/closure.hpp"
#include "liegeo/errors.hpp"

namespace liegeo {

namespace {

bool pairwise_collinear(const Geometry& g, const DynBitset& s, std::string* why) {
  auto idx = s.to_indices();
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (!g.adjacent(idx[i], idx[j])) {
        if (why)
          *why = "points " + std::to_string(idx[i]) + " and " +
                 std::to_string(idx[j]) + " are not collinear";
        return false;
      }
  return true;
}

}  // namespace

bool is_projective_space(const Geometry& g, int& dim) {
  std::size_t n = g.points();
  if (n == 0) return false;
  if (n == 1) {
    dim = 0;
    return true;
  }
  // (i) every pair of points on exactly one line; the pair-to-line map also
  // serves the Veblen-Young pass below
  std::unordered_map<uint64_t, uint32_t> line_of_pair;
  line_of_pair.reserve(n * 4);
  for (uint32_t li = 0; li < g.line_count(); ++li) {
    const Line& l = g.lines()[li];
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        uint64_t key = static_cast<uint64_t>(l[i]) * n + l[j];
        if (!line_of_pair.emplace(key, li).second) return false;  // two lines
      }
  }
  if (line_of_pair.size() != n * (n - 1) / 2) return false;  // missing pair
  auto line_of = [&](uint32_t p, uint32_t q) -> const Line& {
    if (p > q) std::swap(p, q);
    return g.lines()[line_of_pair.at(static_cast<uint64_t>(p) * n + q)];
  };
  // (ii) Veblen-Young on line pairs meeting in a point: lines joining the
  // remaining points of the two lines pairwise intersect.
  for (std::size_t a = 0; a < g.line_count(); ++a)
    for (std::size_t b = a + 1; b < g.line_count(); ++b) {
      const Line &la = g.lines()[a], &lb = g.lines()[b];
      std::vector<uint32_t> common;
      std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(),
                            std::back_inserter(common));
      if (common.size() != 1) continue;
      uint32_t p = common[0];
      for (uint32_t x1 : la) {
        if (x1 == p) continue;
        for (uint32_t x2 : lb) {
          if (x2 == p) continue;
          for (uint32_t y1 : la) {
            if (y1 == p || y1 == x1) continue;
            for (uint32_t y2 : lb) {
              if (y2 == p || y2 == x2) continue;
              const Line& m1 = line_of(x1, x2);
              const Line& m2 = line_of(y1, y2);
              std::vector<uint32_t> meet;
              std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(),
                                    std::back_inserter(meet));
              if (meet.empty()) return false;
            }
          }
        }
      }
    }
  // (iii) dimension along a greedy maximal chain
  DynBitset s(n);
  s.set(0);
  int d = 0;
  while (s.count() < n) {
    std::size_t z = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!s.test(i)) {
        z = i;
        break;
      }
    DynBitset grown = s;
    grown.set(z);
    s = subspace_closure(g, grown);
    ++d;
  }
  dim = d;
  return true;
}

SingularCheck is_singular(const Geometry& g, const DynBitset& s) {
  SingularCheck r;
  if (s.none()) {
    r.reason = "empty set";
    return r;
  }
  if (!pairwise_collinear(g, s, &r.reason)) return r;
  if (!is_subspace(g, s)) {
    r.reason = "not closed under lines";
    return r;
  }
  r.ok = true;
  r.sub.points = s;
  if (s.count() == 1) {
    r.sub.projective = true;
    r.sub.dim = 0;
    return r;
  }
  Induced sub = induced(g, s);
  int dim = -1;
  if (is_projective_space(sub.geom, dim)) {
    r.sub.projective = true;
    r.sub.dim = dim;
  }
  return r;
}

namespace {

void bk(const Geometry& g, DynBitset& r, DynBitset p, DynBitset x,
        std::vector<DynBitset>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  // pivot: candidate dominating the most of P
  uint32_t pivot = UINT32_MAX;
  std::size_t best = 0;
  bool have = false;
  DynBitset px = p | x;
  px.for_each([&](std::size_t u) {
    std::size_t c = DynBitset::and_count(p, g.adj(static_cast<uint32_t>(u)));
    if (!have || c > best) {
      have = true;
      best = c;
      pivot = static_cast<uint32_t>(u);
    }
  });
  DynBitset cand = p;
  if (pivot != UINT32_MAX) cand -= g.adj(pivot);
  for (uint32_t v : cand.to_indices()) {
    r.set(v);
    bk(g, r, p & g.adj(v), x & g.adj(v), out);
    r.reset(v);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::vector<DynBitset> maximal_cliques(const Geometry& g) {
  std::size_t n = g.points();
  DynBitset r(n), p(n), x(n);
  for (std::size_t i = 0; i < n; ++i) p.set(i);
  std::vector<DynBitset> out;
  bk(g, r, std::move(p), std::move(x), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SingularSubspace> enumerate_maximal_singulars(const Geometry& g) {
  std::vector<SingularSubspace> out;
  for (const DynBitset& c : maximal_cliques(g)) {
    if (!is_subspace(g, c)) continue;
    SingularCheck chk = is_singular(g, c);
    if (chk.ok) out.push_back(std::move(chk.sub));
  }
  return out;
}

std::vector<DynBitset> singular_subspaces_of_dim(const Geometry& g, int d) {
  if (d < 1) throw InputError("singular_subspaces_of_dim needs d >= 1");
  std::unordered_set<DynBitset, DynBitset::Hash> level;
  for (const Line& l : g.lines()) {
    DynBitset b = bitset_of(g.points(), l);
    DynBitset cl = subspace_closure(g, b);
    SingularCheck chk = is_singular(g, cl);
    if (chk.ok && chk.sub.projective && chk.sub.dim == 1) level.insert(cl);
  }
  for (int cur = 1; cur < d; ++cur) {
    std::unordered_set<DynBitset, DynBitset::Hash> next;
    for (const DynBitset& s : level) {
      // candidates collinear with everything in s
      DynBitset cand(g.points());
      bool first = true;
      s.for_each([&](std::size_t p) {
        if (first) {
          cand = g.adj(static_cast<uint32_t>(p));
          first = false;
        } else {
          cand &= g.adj(static_cast<uint32_t>(p));
        }
      });
      cand -= s;
      for (uint32_t z : cand.to_indices()) {
        DynBitset grown = s;
        grown.set(z);
        DynBitset cl = subspace_closure(g, grown);
        if (next.count(cl)) continue;
        SingularCheck chk = is_singular(g, cl);
        if (chk.ok && chk.sub.projective && chk.sub.dim == cur + 1)
          next.insert(std::move(cl));
      }
    }
    level = std::move(next);
  }
  std::vector<DynBitset> out(level.begin(), level.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace liegeo
