#include "liegeo/geometry.hpp"

#include <algorithm>

#include "liegeo/errors.hpp"

namespace liegeo {

bool Geometry::connected() const {
  if (n_ == 0) return true;
  DynBitset seen(n_);
  std::vector<uint32_t> stack{0};
  seen.set(0);
  std::size_t cnt = 1;
  while (!stack.empty()) {
    uint32_t p = stack.back();
    stack.pop_back();
    adj_[p].for_each([&](std::size_t q) {
      if (!seen.test(q)) {
        seen.set(q);
        ++cnt;
        stack.push_back(static_cast<uint32_t>(q));
      }
    });
  }
  return cnt == n_;
}

Geometry make_geometry(std::size_t point_count, std::vector<Line> lines,
                       std::vector<std::string> labels, bool allow_uncovered,
                       bool strict) {
  for (auto& l : lines) {
    std::sort(l.begin(), l.end());
    if (l.size() < 2) throw InputError("line with fewer than 2 points");
    for (std::size_t i = 0; i + 1 < l.size(); ++i)
      if (l[i] == l[i + 1]) throw InputError("repeated point on a line");
    if (l.back() >= point_count) throw InputError("line point index out of range");
  }
  std::sort(lines.begin(), lines.end());
  auto dup = std::adjacent_find(lines.begin(), lines.end());
  if (dup != lines.end()) {
    if (strict) throw InputError("duplicate line");
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  }
  if (!labels.empty() && labels.size() != point_count)
    throw InputError("label count does not match point count");

  Geometry g;
  g.n_ = point_count;
  g.lines_ = std::move(lines);
  g.labels_ = std::move(labels);
  g.adj_.assign(point_count, DynBitset(point_count));
  g.perp_.assign(point_count, DynBitset(point_count));
  g.lines_through_.assign(point_count, {});
  for (std::size_t li = 0; li < g.lines_.size(); ++li) {
    const Line& l = g.lines_[li];
    for (std::size_t i = 0; i < l.size(); ++i) {
      g.lines_through_[l[i]].push_back(static_cast<uint32_t>(li));
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        g.adj_[l[i]].set(l[j]);
        g.adj_[l[j]].set(l[i]);
      }
    }
  }
  for (std::size_t p = 0; p < point_count; ++p) {
    g.perp_[p] = g.adj_[p];
    g.perp_[p].set(p);
    if (g.lines_through_[p].empty()) {
      if (!allow_uncovered) throw InputError("point " + std::to_string(p) + " lies on no line");
      g.covering_ = false;
    }
  }
  return g;
}

Induced induced(const Geometry& g, const DynBitset& s) {
  if (s.none()) throw InputError("induced subgeometry of the empty set");
  std::vector<uint32_t> to_parent = s.to_indices();
  std::vector<uint32_t> to_new(g.points(), UINT32_MAX);
  for (std::size_t i = 0; i < to_parent.size(); ++i) to_new[to_parent[i]] = static_cast<uint32_t>(i);

  // every surviving line passes through a member, so only those candidates
  // are scanned; worthwhile on large geometries with small subsets
  std::vector<Line> lines;
  std::vector<uint32_t> cand;
  for (uint32_t p : to_parent)
    for (uint32_t li : g.lines_through(p)) cand.push_back(li);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (uint32_t li : cand) {
    const Line& l = g.lines()[li];
    bool inside = true;
    for (uint32_t p : l)
      if (!s.test(p)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    Line nl;
    nl.reserve(l.size());
    for (uint32_t p : l) nl.push_back(to_new[p]);
    lines.push_back(std::move(nl));
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(to_parent.size());
    for (uint32_t p : to_parent) labels.push_back(g.label(p));
  }
  return {make_geometry(to_parent.size(), std::move(lines), std::move(labels),
                        /*allow_uncovered=*/true),
          std::move(to_parent)};
}

Geometry thick_line(std::size_t s) {
  if (s < 3) throw InputError("a thick line needs at least 3 points");
  Line l(s);
  for (std::size_t i = 0; i < s; ++i) l[i] = static_cast<uint32_t>(i);
  return make_geometry(s, {l});
}

Geometry product(const Geometry& a, const Geometry& b) {
  std::size_t na = a.points(), nb = b.points();
  auto idx = [nb](std::size_t i, std::size_t j) {
    return static_cast<uint32_t>(i * nb + j);
  };
  std::vector<Line> lines;
  lines.reserve(na * b.line_count() + nb * a.line_count());
  for (std::size_t i = 0; i < na; ++i)
    for (const Line& l : b.lines()) {
      Line nl;
      nl.reserve(l.size());
      for (uint32_t j : l) nl.push_back(idx(i, j));
      lines.push_back(std::move(nl));
    }
  for (const Line& l : a.lines())
    for (std::size_t j = 0; j < nb; ++j) {
      Line nl;
      nl.reserve(l.size());
      for (uint32_t i : l) nl.push_back(idx(i, j));
      lines.push_back(std::move(nl));
    }
  std::vector<std::string> labels(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const std::string li = a.has_labels() ? a.label(static_cast<uint32_t>(i)) : std::to_string(i);
      const std::string lj = b.has_labels() ? b.label(static_cast<uint32_t>(j)) : std::to_string(j);
      labels[idx(i, j)] = "(" + li + "," + lj + ")";
    }
  return make_geometry(na * nb, std::move(lines), std::move(labels));
}

}  // namespace liegeo
