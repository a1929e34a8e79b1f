#include "liegeo/fingerprint.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "liegeo/errors.hpp"

namespace liegeo {

std::string Fingerprint::to_string() const {
  std::ostringstream s;
  auto mm = [&](const auto& m) {
    s << '{';
    bool first = true;
    for (const auto& [k, v] : m) {
      if (!first) s << ' ';
      first = false;
      s << k << ':' << v;
    }
    s << '}';
  };
  s << "pts=" << points << " lines=" << lines << " sizes=";
  mm(line_sizes);
  s << " degs=";
  mm(degrees);
  s << " diam=";
  if (diameter == kInfDistance) s << "inf";
  else s << diameter;
  s << " symps=";
  mm(symp_ranks);
  s << " maxsing=";
  mm(max_singular_dims);
  s << " strong=" << (strong ? "yes" : "no");
  return s.str();
}

Fingerprint fingerprint(const Geometry& g, const ParapolarReport& report) {
  Fingerprint f;
  f.points = g.points();
  f.lines = g.line_count();
  for (const Line& l : g.lines()) ++f.line_sizes[l.size()];
  for (uint32_t p = 0; p < g.points(); ++p) ++f.degrees[g.degree(p)];
  f.diameter = report.diameter;
  for (const Symp& s : report.symps) ++f.symp_ranks[s.rank];
  f.max_singular_dims = report.max_singular_dims;
  f.strong = report.strong;
  return f;
}

Fingerprint fingerprint(const Geometry& g) {
  return fingerprint(g, verify_parapolar(g));
}

namespace {

// Incidence graph: vertices 0..n-1 are points, n..n+m-1 lines.
struct IncGraph {
  std::size_t n_points, n_lines;
  std::vector<std::vector<uint32_t>> adj;

  explicit IncGraph(const Geometry& g)
      : n_points(g.points()), n_lines(g.line_count()), adj(n_points + n_lines) {
    for (std::size_t li = 0; li < n_lines; ++li)
      for (uint32_t p : g.lines()[li]) {
        adj[n_points + li].push_back(p);
        adj[p].push_back(static_cast<uint32_t>(n_points + li));
      }
    for (auto& a : adj) std::sort(a.begin(), a.end());
  }
  std::size_t size() const { return adj.size(); }
};

// One refinement round: new colour = (old colour, sorted multiset of
// neighbour colours). Returns false when the partition is stable.
bool refine_once(const IncGraph& g, std::vector<uint32_t>& colour) {
  std::vector<std::pair<std::vector<uint32_t>, uint32_t>> sig(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::vector<uint32_t> s;
    s.reserve(g.adj[v].size() + 1);
    s.push_back(colour[v]);
    for (uint32_t u : g.adj[v]) s.push_back(colour[u]);
    std::sort(s.begin() + 1, s.end());
    sig[v] = {std::move(s), static_cast<uint32_t>(v)};
  }
  std::vector<std::size_t> order(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sig[a].first < sig[b].first;
  });
  std::vector<uint32_t> next(g.size());
  uint32_t c = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i && sig[order[i]].first != sig[order[i - 1]].first) ++c;
    next[order[i]] = c;
  }
  bool changed = next != colour;
  colour = std::move(next);
  return changed;
}

void refine(const IncGraph& g, std::vector<uint32_t>& colour) {
  while (refine_once(g, colour)) {
  }
}

std::vector<std::size_t> colour_histogram(const std::vector<uint32_t>& colour) {
  std::size_t top = 0;
  for (uint32_t c : colour) top = std::max<std::size_t>(top, c);
  std::vector<std::size_t> h(top + 1, 0);
  for (uint32_t c : colour) ++h[c];
  return h;
}

bool match(const IncGraph& ga, const IncGraph& gb, std::vector<uint32_t> ca,
           std::vector<uint32_t> cb, int depth) {
  if (depth > 64) throw SizeExceeded("isomorphism search too deep");
  refine(ga, ca);
  refine(gb, cb);
  if (colour_histogram(ca) != colour_histogram(cb)) return false;
  // colour classes must carry identical signatures on both sides; the
  // histogram comparison above only checks sizes per colour id, which is
  // enough because colours are assigned in signature order on each side and
  // the signatures are graph-canonical after full refinement
  std::size_t nclasses = colour_histogram(ca).size();
  // discrete partition: verify the induced bijection
  bool discrete = nclasses == ga.size();
  if (discrete) {
    std::vector<uint32_t> a_of(nclasses), b_of(nclasses);
    for (std::size_t v = 0; v < ga.size(); ++v) a_of[ca[v]] = static_cast<uint32_t>(v);
    for (std::size_t v = 0; v < gb.size(); ++v) b_of[cb[v]] = static_cast<uint32_t>(v);
    for (std::size_t v = 0; v < ga.size(); ++v) {
      const auto& na = ga.adj[v];
      std::vector<uint32_t> nb;
      nb.reserve(na.size());
      for (uint32_t u : gb.adj[b_of[ca[v]]]) nb.push_back(u);
      std::vector<uint32_t> mapped;
      mapped.reserve(na.size());
      for (uint32_t u : na) mapped.push_back(b_of[ca[u]]);
      std::sort(mapped.begin(), mapped.end());
      std::sort(nb.begin(), nb.end());
      if (mapped != nb) return false;
    }
    return true;
  }
  // individualize: smallest non-singleton colour class
  auto hist = colour_histogram(ca);
  uint32_t target = UINT32_MAX;
  std::size_t best = SIZE_MAX;
  for (std::size_t c = 0; c < hist.size(); ++c)
    if (hist[c] > 1 && hist[c] < best) {
      best = hist[c];
      target = static_cast<uint32_t>(c);
    }
  uint32_t va = UINT32_MAX;
  for (std::size_t v = 0; v < ga.size(); ++v)
    if (ca[v] == target) {
      va = static_cast<uint32_t>(v);
      break;
    }
  uint32_t fresh = static_cast<uint32_t>(hist.size());
  for (std::size_t v = 0; v < gb.size(); ++v) {
    if (cb[v] != target) continue;
    std::vector<uint32_t> ca2 = ca, cb2 = cb;
    ca2[va] = fresh;
    cb2[v] = fresh;
    if (match(ga, gb, std::move(ca2), std::move(cb2), depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool exact_iso_small(const Geometry& a, const Geometry& b,
                     std::size_t max_vertices) {
  IncGraph ga(a), gb(b);
  if (ga.size() > max_vertices || gb.size() > max_vertices)
    throw SizeExceeded("incidence graph exceeds " + std::to_string(max_vertices) +
                       " vertices");
  if (ga.n_points != gb.n_points || ga.n_lines != gb.n_lines) return false;
  std::vector<uint32_t> ca(ga.size()), cb(gb.size());
  for (std::size_t v = 0; v < ga.size(); ++v) ca[v] = v < ga.n_points ? 0 : 1;
  for (std::size_t v = 0; v < gb.size(); ++v) cb[v] = v < gb.n_points ? 0 : 1;
  return match(ga, gb, std::move(ca), std::move(cb), 0);
}

}  // namespace liegeo
