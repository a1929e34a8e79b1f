#include "liegeo/assembly.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "liegeo/construct.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/fingerprint.hpp"
#include "liegeo/singular.hpp"

namespace liegeo {

std::size_t SheetAssembly::total_points() const {
  std::size_t n = 0;
  for (const Geometry& s : sheets) n += s.points();
  return n;
}

bool SheetAssembly::trivial_relation() const {
  for (const auto& c : classes)
    if (c.size() > 1) return false;
  return true;
}

void SheetAssembly::rebuild_class_index() {
  class_of.clear();
  class_of.resize(sheets.size());
  for (std::size_t i = 0; i < sheets.size(); ++i)
    class_of[i].assign(sheets[i].points(), UINT32_MAX);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const SheetPoint& sp : classes[c]) {
      if (sp.sheet >= sheets.size() || sp.point >= sheets[sp.sheet].points())
        throw InputError("glue point out of range");
      if (class_of[sp.sheet][sp.point] != UINT32_MAX)
        throw InputError("point glued twice");
      class_of[sp.sheet][sp.point] = static_cast<uint32_t>(c);
    }
  for (std::size_t i = 0; i < sheets.size(); ++i)
    for (std::size_t p = 0; p < sheets[i].points(); ++p)
      if (class_of[i][p] == UINT32_MAX) throw InputError("point missing from relation");
}

SheetAssembly make_assembly(std::vector<Geometry> sheets,
                            const std::vector<std::vector<SheetPoint>>& glue) {
  SheetAssembly a;
  a.sheets = std::move(sheets);
  std::map<SheetPoint, uint32_t> glued;
  std::vector<std::vector<SheetPoint>> classes;
  for (const auto& c : glue) {
    if (c.size() < 2) throw InputError("glue class needs at least 2 points");
    std::vector<SheetPoint> cls = c;
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (const SheetPoint& sp : cls) {
      if (glued.count(sp)) throw InputError("point appears in two glue classes");
      glued[sp] = static_cast<uint32_t>(classes.size());
    }
    classes.push_back(std::move(cls));
  }
  for (uint32_t i = 0; i < a.sheets.size(); ++i)
    for (uint32_t p = 0; p < a.sheets[i].points(); ++p)
      if (!glued.count({i, p})) classes.push_back({{i, p}});
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  a.classes = std::move(classes);
  a.rebuild_class_index();
  validate_c1(a);
  validate_c2(a);
  return a;
}

namespace {

struct Disjoint {
  std::vector<std::size_t> offset;  // sheet -> global base
  std::size_t total = 0;
  explicit Disjoint(const std::vector<Geometry>& sheets) {
    offset.reserve(sheets.size());
    for (const Geometry& s : sheets) {
      offset.push_back(total);
      total += s.points();
    }
  }
  std::size_t global(const SheetPoint& sp) const { return offset[sp.sheet] + sp.point; }
};

std::vector<std::vector<uint8_t>> sheet_distances(const Geometry& s) {
  std::vector<std::vector<uint8_t>> rows(s.points());
  for (std::size_t p = 0; p < s.points(); ++p) rows[p] = bfs_row(s, static_cast<uint32_t>(p));
  return rows;
}

}  // namespace

bool validate_c1(SheetAssembly& a) {
  a.c1_ok = true;
  a.c1_witness.clear();
  Disjoint dj(a.sheets);
  std::vector<std::vector<std::vector<uint8_t>>> dist;
  dist.reserve(a.sheets.size());
  for (const Geometry& s : a.sheets) dist.push_back(sheet_distances(s));

  for (std::size_t ci = 0; ci < a.classes.size() && a.c1_ok; ++ci) {
    const auto& cls = a.classes[ci];
    if (cls.size() < 2) continue;
    for (std::size_t i = 0; i < cls.size() && a.c1_ok; ++i)
      for (std::size_t j = i + 1; j < cls.size() && a.c1_ok; ++j) {
        const SheetPoint p2 = cls[i], p1 = cls[j];
        // BFS over (global point, teleport-used flag), teleports at every
        // class except ci, depth capped at 4
        std::vector<uint8_t> seen(dj.total * 2, 0);
        std::vector<std::pair<uint32_t, uint8_t>> frontier{{static_cast<uint32_t>(dj.global(p2)), 0}};
        seen[dj.global(p2) * 2] = 1;
        bool pure_hit = false, teleport_hit = false;
        for (int depth = 1; depth <= 4 && !teleport_hit; ++depth) {
          std::vector<std::pair<uint32_t, uint8_t>> next;
          for (auto [gp, used] : frontier) {
            // locate sheet
            std::size_t sh = std::upper_bound(dj.offset.begin(), dj.offset.end(), gp) -
                             dj.offset.begin() - 1;
            uint32_t local = static_cast<uint32_t>(gp - dj.offset[sh]);
            a.sheets[sh].adj(local).for_each([&](std::size_t q) {
              std::size_t gq = dj.offset[sh] + q;
              // teleport closure of the step target
              std::vector<std::pair<uint32_t, uint8_t>> targets{{static_cast<uint32_t>(gq), used}};
              uint32_t qc = a.class_of[sh][q];
              if (qc != ci)
                for (const SheetPoint& other : a.classes[qc]) {
                  std::size_t go = dj.global(other);
                  if (go != gq) targets.push_back({static_cast<uint32_t>(go), 1});
                }
              for (auto [t, fl] : targets) {
                uint8_t flag = std::max(used, fl);
                if (!seen[t * 2 + flag]) {
                  seen[t * 2 + flag] = 1;
                  next.push_back({t, flag});
                  if (t == dj.global(p1)) (flag ? teleport_hit : pure_hit) = true;
                }
              }
            });
          }
          frontier = std::move(next);
        }
        bool violated = teleport_hit;
        if (!violated && pure_hit) {
          // a pure walk needs a marker point outside the class within budget
          const auto& d2 = dist[p2.sheet][p2.point];
          const auto& d1 = dist[p1.sheet][p1.point];
          for (std::size_t z = 0; z < a.sheets[p2.sheet].points() && !violated; ++z) {
            if (a.class_of[p2.sheet][z] == ci) continue;
            if (d2[z] != kUnreached && d1[z] != kUnreached && d2[z] + d1[z] <= 4)
              violated = true;
          }
        }
        if (violated) {
          a.c1_ok = false;
          a.c1_witness = "class " + std::to_string(ci) + " has points (sheet " +
                         std::to_string(p2.sheet) + ", point " + std::to_string(p2.point) +
                         ") and (sheet " + std::to_string(p1.sheet) + ", point " +
                         std::to_string(p1.point) + ") joined by a walk of length <= 4";
        }
      }
  }

  if (a.total_points() <= 200) {
    std::string w;
    bool lit = validate_c1_literal(a, &w);
    if (lit != a.c1_ok)
      throw VerificationError("condition (C1) checks disagree: search says " +
                              std::string(a.c1_ok ? "pass" : "fail") +
                              ", quadruple enumeration says " + (lit ? "pass" : "fail"));
  }
  return a.c1_ok;
}

bool validate_c1_literal(const SheetAssembly& a, std::string* witness) {
  Disjoint dj(a.sheets);
  std::size_t n = dj.total;
  // full distance table on the disjoint union, infinity across sheets
  constexpr int INF = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
  for (std::size_t sh = 0; sh < a.sheets.size(); ++sh) {
    auto rows = sheet_distances(a.sheets[sh]);
    for (std::size_t p = 0; p < a.sheets[sh].points(); ++p)
      for (std::size_t q = 0; q < a.sheets[sh].points(); ++q)
        if (rows[p][q] != kUnreached)
          d[dj.offset[sh] + p][dj.offset[sh] + q] = rows[p][q];
  }
  std::vector<uint32_t> cls(n);
  for (std::size_t sh = 0; sh < a.sheets.size(); ++sh)
    for (std::size_t p = 0; p < a.sheets[sh].points(); ++p)
      cls[dj.offset[sh] + p] = a.class_of[sh][p];

  auto leg = [&](const std::vector<int>& f) {
    std::vector<int> g(n, INF);
    for (std::size_t y = 0; y < n; ++y) {
      if (f[y] >= INF) continue;
      for (std::size_t x = 0; x < n; ++x)
        g[x] = std::min(g[x], f[y] + d[y][x]);
    }
    return g;
  };
  auto teleport = [&](std::vector<int> f, uint32_t avoid) {
    // mask points of the avoided class, then close under the relation
    std::vector<int> best(a.classes.size(), INF);
    for (std::size_t x = 0; x < n; ++x) {
      if (cls[x] == avoid) {
        f[x] = INF;
        continue;
      }
      best[cls[x]] = std::min(best[cls[x]], f[x]);
    }
    for (std::size_t x = 0; x < n; ++x)
      if (cls[x] != avoid) f[x] = best[cls[x]];
    return f;
  };

  for (std::size_t ci = 0; ci < a.classes.size(); ++ci) {
    const auto& c = a.classes[ci];
    if (c.size() < 2) continue;
    for (const SheetPoint& start : c) {
      std::vector<int> f(n, INF);
      f[dj.global(start)] = 0;
      // four legs with teleports at classes other than ci between them
      std::vector<int> g = leg(f);
      for (int legs = 1; legs < 4; ++legs) g = leg(teleport(std::move(g), static_cast<uint32_t>(ci)));
      for (const SheetPoint& end : c) {
        if (end == start) continue;
        if (g[dj.global(end)] <= 4) {
          if (witness)
            *witness = "class " + std::to_string(ci) + " representatives " +
                       std::to_string(start.point) + " and " + std::to_string(end.point) +
                       " admit a quadruple with distance sum " +
                       std::to_string(g[dj.global(end)]);
          return false;
        }
      }
    }
  }
  return true;
}

bool validate_c2(SheetAssembly& a) {
  std::size_t ns = a.sheets.size();
  std::vector<std::size_t> parent(ns);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : a.classes)
    for (std::size_t i = 1; i < c.size(); ++i)
      parent[find(c[i].sheet)] = find(c[0].sheet);
  std::size_t root = find(0);
  a.c2_ok = true;
  for (std::size_t s = 1; s < ns; ++s)
    if (find(s) != root) {
      a.c2_ok = false;
      a.c2_witness = "sheets 0 and " + std::to_string(s) + " are not joined by glue classes";
      break;
    }
  return a.c2_ok;
}

Unbuttoning unbutton(const Geometry& g, const std::vector<Symp>& symps) {
  for (const Symp& s : symps)
    if (s.rank < 3)
      throw RankTooLow("unbuttoning needs symplectic rank >= 3, found a rank-" +
                       std::to_string(s.rank) + " symp");

  std::size_t n = g.points();
  // residual component of each line at each of its points
  std::vector<uint32_t> comp_count(n, 0);
  std::vector<std::map<uint32_t, uint32_t>> comp_of_line(n);  // line id -> comp
  for (uint32_t p = 0; p < n; ++p) {
    Residual r = point_residual(g, p, symps);
    const Geometry& rg = r.geom;
    std::vector<uint32_t> comp(rg.points(), UINT32_MAX);
    uint32_t nc = 0;
    for (uint32_t s = 0; s < rg.points(); ++s) {
      if (comp[s] != UINT32_MAX) continue;
      std::vector<uint32_t> stack{s};
      comp[s] = nc;
      while (!stack.empty()) {
        uint32_t x = stack.back();
        stack.pop_back();
        rg.adj(x).for_each([&](std::size_t y) {
          if (comp[y] == UINT32_MAX) {
            comp[y] = nc;
            stack.push_back(static_cast<uint32_t>(y));
          }
        });
      }
      ++nc;
    }
    comp_count[p] = nc;
    for (std::size_t i = 0; i < r.parent_line.size(); ++i)
      comp_of_line[p][r.parent_line[i]] = comp[i];
  }

  // unbuttoned points (p, component)
  std::vector<uint32_t> base(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) base[p + 1] = base[p] + comp_count[p];
  std::size_t un = base[n];

  std::vector<Line> ulines;
  ulines.reserve(g.line_count());
  for (std::size_t li = 0; li < g.line_count(); ++li) {
    Line ul;
    for (uint32_t p : g.lines()[li])
      ul.push_back(base[p] + comp_of_line[p].at(static_cast<uint32_t>(li)));
    ulines.push_back(std::move(ul));
  }
  std::vector<std::string> ulabels(un);
  for (uint32_t p = 0; p < n; ++p)
    for (uint32_t c = 0; c < comp_count[p]; ++c)
      ulabels[base[p] + c] = std::to_string(p) + "#" + std::to_string(c);
  Geometry ug = make_geometry(un, std::move(ulines), std::move(ulabels));

  // connected components of the unbuttoning become the sheets
  std::vector<uint32_t> sheet_of(un, UINT32_MAX);
  uint32_t nsheets = 0;
  for (uint32_t s = 0; s < un; ++s) {
    if (sheet_of[s] != UINT32_MAX) continue;
    std::vector<uint32_t> stack{s};
    sheet_of[s] = nsheets;
    while (!stack.empty()) {
      uint32_t x = stack.back();
      stack.pop_back();
      ug.adj(x).for_each([&](std::size_t y) {
        if (sheet_of[y] == UINT32_MAX) {
          sheet_of[y] = nsheets;
          stack.push_back(static_cast<uint32_t>(y));
        }
      });
    }
    ++nsheets;
  }

  std::vector<std::vector<uint32_t>> sheet_points(nsheets);
  std::vector<uint32_t> local(un);
  for (uint32_t x = 0; x < un; ++x) {
    local[x] = static_cast<uint32_t>(sheet_points[sheet_of[x]].size());
    sheet_points[sheet_of[x]].push_back(x);
  }
  std::vector<std::vector<Line>> sheet_lines(nsheets);
  for (const Line& l : ug.lines()) {
    uint32_t sh = sheet_of[l[0]];
    Line sl;
    for (uint32_t x : l) sl.push_back(local[x]);
    sheet_lines[sh].push_back(std::move(sl));
  }
  std::vector<Geometry> sheets;
  for (uint32_t sh = 0; sh < nsheets; ++sh) {
    std::vector<std::string> labels;
    labels.reserve(sheet_points[sh].size());
    for (uint32_t x : sheet_points[sh]) labels.push_back(ug.label(x));
    sheets.push_back(make_geometry(sheet_points[sh].size(), std::move(sheet_lines[sh]),
                                   std::move(labels)));
  }

  // relation: sharing the first coordinate
  std::vector<std::vector<SheetPoint>> glue(n);
  for (uint32_t x = 0; x < un; ++x) {
    // recover parent point from the base table
    uint32_t p = static_cast<uint32_t>(
        std::upper_bound(base.begin(), base.end(), x) - base.begin() - 1);
    glue[p].push_back({sheet_of[x], local[x]});
  }
  std::vector<std::vector<SheetPoint>> nontrivial;
  for (auto& c : glue)
    if (c.size() >= 2) nontrivial.push_back(std::move(c));

  Unbuttoning out{make_assembly(std::move(sheets), nontrivial), {}};
  for (const Geometry& s : out.assembly.sheets) {
    ParapolarReport rep = verify_parapolar(s);
    LocalConnectivity lc = is_locally_connected(s, rep.symps);
    if (!lc.locally_connected)
      throw VerificationError("unbuttoned sheet is not locally connected");
    PolarVerdict pv = verify_polar(s);
    if (!rep.parapolar() && !pv.is_polar)
      throw VerificationError("unbuttoned sheet is neither polar nor parapolar");
    out.sheet_reports.push_back(std::move(rep));
  }
  return out;
}

Geometry button(const SheetAssembly& a) {
  if (!a.c1_ok) throw C1Violation(a.c1_witness);
  if (!a.c2_ok) throw C2Violation(a.c2_witness);
  for (const Geometry& s : a.sheets) {
    ParapolarReport rep = verify_parapolar(s);
    PolarVerdict pv = verify_polar(s);
    bool polar_ok = pv.is_polar && pv.rank >= 2;
    bool para_ok = rep.parapolar() && rep.min_rank() >= 2;
    if (!polar_ok && !para_ok)
      throw SheetNotValid("sheet is neither a polar space nor a parapolar space of rank >= 2");
    LocalConnectivity lc = is_locally_connected(s, rep.symps);
    if (!lc.locally_connected)
      throw SheetNotValid("sheet is not locally connected at point " +
                          std::to_string(*lc.witness));
  }

  std::vector<Line> lines;
  std::unordered_set<DynBitset, DynBitset::Hash> seen;
  for (std::size_t sh = 0; sh < a.sheets.size(); ++sh)
    for (const Line& l : a.sheets[sh].lines()) {
      Line bl;
      for (uint32_t p : l) bl.push_back(a.class_of[sh][p]);
      std::sort(bl.begin(), bl.end());
      for (std::size_t i = 0; i + 1 < bl.size(); ++i)
        if (bl[i] == bl[i + 1])
          throw VerificationError("two points of one line fell into one class");
      DynBitset key = bitset_of(a.classes.size(), bl);
      if (!seen.insert(key).second)
        throw VerificationError("two sheet lines produced the same buttoned line");
      lines.push_back(std::move(bl));
    }

  std::vector<std::string> labels(a.classes.size());
  for (std::size_t c = 0; c < a.classes.size(); ++c) {
    std::string l;
    for (const SheetPoint& sp : a.classes[c]) {
      if (!l.empty()) l += '=';
      l += "s" + std::to_string(sp.sheet) + "p" + std::to_string(sp.point);
    }
    labels[c] = std::move(l);
  }
  return make_geometry(a.classes.size(), std::move(lines), std::move(labels));
}

bool roundtrip_check(const Geometry& g, const std::vector<Symp>& symps,
                     std::size_t max_iso_vertices) {
  Unbuttoning ub = unbutton(g, symps);
  Geometry back = button(ub.assembly);
  if (g.points() + g.line_count() <= max_iso_vertices &&
      back.points() + back.line_count() <= max_iso_vertices)
    return exact_iso_small(g, back, max_iso_vertices);
  return fingerprint(g) == fingerprint(back);
}

std::vector<std::vector<uint32_t>> sheet_recovery(const Geometry& g) {
  std::size_t m = g.line_count();
  std::vector<uint32_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](uint32_t x, uint32_t y) { parent[find(x)] = find(y); };

  for (uint32_t p = 0; p < g.points(); ++p) {
    const auto& lt = g.lines_through(p);
    for (std::size_t i = 0; i < lt.size(); ++i) {
      const Line& la = g.lines()[lt[i]];
      for (std::size_t j = i + 1; j < lt.size(); ++j) {
        if (find(lt[i]) == find(lt[j])) continue;
        const Line& lb = g.lines()[lt[j]];
        bool coplanar = true;
        for (uint32_t x : la) {
          if (x == p) continue;
          for (uint32_t y : lb) {
            if (y == p || y == x) continue;
            if (!g.adjacent(x, y)) {
              coplanar = false;
              break;
            }
          }
          if (!coplanar) break;
        }
        if (!coplanar) continue;
        DynBitset seed(g.points());
        for (uint32_t x : la) seed.set(x);
        for (uint32_t y : lb) seed.set(y);
        DynBitset cl = subspace_closure(g, seed);
        SingularCheck chk = is_singular(g, cl);
        if (chk.ok && chk.sub.projective && chk.sub.dim == 2) unite(lt[i], lt[j]);
      }
    }
  }
  std::map<uint32_t, std::vector<uint32_t>> groups;
  for (uint32_t li = 0; li < m; ++li) groups[find(li)].push_back(li);
  std::vector<std::vector<uint32_t>> out;
  out.reserve(groups.size());
  for (auto& [_, v] : groups) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

SheetAssembly read_asm(const std::string& text) {
  std::istringstream in(text);
  std::string row;
  if (!std::getline(in, row) || row != "asm 1") throw InputError("bad asm header");
  std::vector<Geometry> sheets;
  std::vector<std::vector<SheetPoint>> glue;
  while (std::getline(in, row)) {
    if (row.empty() || row[0] == '#') continue;
    if (row.rfind("sheet ", 0) == 0) {
      sheets.push_back(load_geometry(row.substr(6)));
      continue;
    }
    if (row.rfind("glue:", 0) == 0) {
      std::vector<SheetPoint> cls;
      std::istringstream gs(row.substr(5));
      std::string tok;
      // members look like (i p), separated by =
      std::string buf;
      while (std::getline(gs, buf, '=')) {
        std::size_t open = buf.find('(');
        std::size_t close = buf.find(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
          throw InputError("bad glue member: " + buf);
        std::istringstream ms(buf.substr(open + 1, close - open - 1));
        uint32_t sheet, point;
        if (!(ms >> sheet >> point)) throw InputError("bad glue member: " + buf);
        cls.push_back({sheet, point});
      }
      if (cls.size() < 2) throw InputError("glue class needs at least two members");
      glue.push_back(std::move(cls));
      continue;
    }
    throw InputError("unexpected asm row: " + row);
  }
  if (sheets.empty()) throw InputError("asm file lists no sheets");
  return make_assembly(std::move(sheets), glue);
}

SheetAssembly read_asm_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return read_asm(buf.str());
}

}  // namespace liegeo
