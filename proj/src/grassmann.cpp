#include "liegeo/grassmann.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "liegeo/errors.hpp"

namespace liegeo {

Geometry grassmannian_A(int n, int k, int q) {
  if (k < 1 || k > n) throw InputError("grassmannian needs 1 <= k <= n");
  Gf f(q);
  std::size_t d = static_cast<std::size_t>(n) + 1;
  std::size_t bound = q == 2 ? 8 : 6;
  if (d > bound) throw InputError("projective dimension too large for desk scale");

  std::vector<Rref> pts = subspaces(f, d, static_cast<std::size_t>(k));
  std::unordered_map<std::string, uint32_t> index;
  std::vector<std::string> labels;
  labels.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    labels.push_back(pts[i].label());
    index[labels.back()] = static_cast<uint32_t>(i);
  }

  // Pencils: span combinations W = H + <v> for a (k-1)-space H inside a
  // (k+1)-space E. Enumerate incident (H, E) flags, then the q+1 members.
  std::vector<Line> lines;
  if (k == 1) {
    // full projective lines
    for (const Rref& e : subspaces(f, d, 2)) {
      Line l;
      // 1-spaces inside e
      std::vector<Vec> ps = pencil_points(f, e.rows[0], e.rows[1]);
      for (const Vec& p : ps) l.push_back(index.at(Rref{{p}}.label()));
      lines.push_back(std::move(l));
    }
  } else {
    std::vector<Rref> hs = subspaces(f, d, static_cast<std::size_t>(k) - 1);
    std::vector<Vec> all = projective_points(f, d);
    for (const Rref& h : hs) {
      // extensions E = h + <v> + <w>: enumerate 2-spaces of the quotient by
      // collecting closures h + <v>, then h + <v> + <w>
      std::unordered_map<std::string, Rref> exts;  // (k+1)-spaces over h
      std::vector<Rref> mids;                      // k-spaces over h
      {
        std::unordered_map<std::string, Rref> seen;
        for (const Vec& v : all) {
          std::vector<Vec> gens = h.rows;
          gens.push_back(v);
          Rref w = rref_of(f, std::move(gens));
          if (w.dim() == h.dim() + 1) seen.emplace(w.label(), std::move(w));
        }
        for (auto& [_, w] : seen) mids.push_back(std::move(w));
      }
      for (const Rref& w : mids)
        for (const Vec& v : all) {
          std::vector<Vec> gens = w.rows;
          gens.push_back(v);
          Rref e = rref_of(f, std::move(gens));
          if (e.dim() == w.dim() + 1) exts.emplace(e.label(), std::move(e));
        }
      for (auto& [_, e] : exts) {
        Line l;
        for (const Rref& w : mids)
          if (rank_of(f, [&] {
                std::vector<Vec> g2 = e.rows;
                for (const Vec& r : w.rows) g2.push_back(r);
                return g2;
              }()) == e.dim())
            l.push_back(index.at(w.label()));
        if (l.size() >= 2) lines.push_back(std::move(l));
      }
    }
  }

  return make_geometry(pts.size(), std::move(lines), std::move(labels));
}

namespace {

std::vector<std::string> subspace_labels(const std::vector<DynBitset>& subs) {
  std::vector<std::string> labels;
  labels.reserve(subs.size());
  for (const DynBitset& s : subs) {
    std::string l = "{";
    bool first = true;
    s.for_each([&](std::size_t p) {
      if (!first) l += ' ';
      first = false;
      l += std::to_string(p);
    });
    l += '}';
    labels.push_back(std::move(l));
  }
  return labels;
}

}  // namespace

Geometry polar_grassmannian(const Geometry& polar, int rank, int k) {
  if (k < 1 || k > rank) throw InputError("polar grassmannian needs 1 <= k <= rank");
  if (k == 1) return polar;
  if (k == rank) return dual_polar(polar, rank);

  std::vector<DynBitset> pts = singular_subspaces_of_polar(polar, rank, k);
  std::map<DynBitset, uint32_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], static_cast<uint32_t>(i));

  std::vector<DynBitset> tops = singular_subspaces_of_polar(polar, rank, k + 1);
  std::vector<DynBitset> bots = k >= 2 ? singular_subspaces_of_polar(polar, rank, k - 1)
                                       : std::vector<DynBitset>{};

  // line = points between a fixed (k-2)-space and a fixed k-space
  std::vector<Line> lines;
  for (const DynBitset& top : tops) {
    std::vector<uint32_t> inside;
    for (const auto& [s, i] : index)
      if (s.is_subset_of(top)) inside.push_back(i);
    if (k == 2) {
      // bottoms are single points of the polar space
      top.for_each([&](std::size_t b) {
        Line l;
        for (uint32_t i : inside)
          if (pts[i].test(b)) l.push_back(i);
        if (l.size() >= 2) lines.push_back(std::move(l));
      });
    } else {
      for (const DynBitset& bot : bots) {
        if (!bot.is_subset_of(top)) continue;
        Line l;
        for (uint32_t i : inside)
          if (bot.is_subset_of(pts[i])) l.push_back(i);
        if (l.size() >= 2) lines.push_back(std::move(l));
      }
    }
  }

  return make_geometry(pts.size(), std::move(lines), subspace_labels(pts));
}

Geometry dual_polar(const Geometry& polar, int rank) {
  if (rank < 2) throw InputError("dual polar space needs rank >= 2");
  std::vector<DynBitset> maxes = singular_subspaces_of_polar(polar, rank, rank);
  std::map<DynBitset, uint32_t> index;
  for (std::size_t i = 0; i < maxes.size(); ++i) index.emplace(maxes[i], static_cast<uint32_t>(i));

  std::vector<DynBitset> nexts =
      rank == 2 ? singular_subspaces_of_polar(polar, rank, 1)
                : singular_subspaces_of_polar(polar, rank, rank - 1);

  std::vector<Line> lines;
  for (const DynBitset& s : nexts) {
    Line l;
    for (std::size_t i = 0; i < maxes.size(); ++i)
      if (s.is_subset_of(maxes[i])) l.push_back(static_cast<uint32_t>(i));
    if (l.size() >= 2) lines.push_back(std::move(l));
  }
  return make_geometry(maxes.size(), std::move(lines), subspace_labels(maxes));
}

Geometry half_spin(const FormSpec& spec) {
  if (spec.kind != FormKind::Hyperbolic)
    throw InputError("half-spin geometry needs a hyperbolic (non-thick) polar space");
  int n = spec.witt_index();
  if (n < 3) throw InputError("half-spin geometry needs rank >= 3");
  FormContext ctx(spec);
  const Gf& f = ctx.field();

  std::vector<Rref> maxes = ctx.totally_singular(static_cast<std::size_t>(n));

  // reference generator: e_0, e_2, ..., e_{2n-2}
  Rref ref;
  {
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
      Vec v(spec.dim, 0);
      v[2 * static_cast<std::size_t>(i)] = 1;
      rows.push_back(std::move(v));
    }
    ref = rref_of(f, std::move(rows));
  }

  // family of M: dim(M meet ref) has the parity of n exactly for members of
  // the reference family
  auto meet_dim = [&](const Rref& m) {
    std::vector<Vec> gens = m.rows;
    for (const Vec& r : ref.rows) gens.push_back(r);
    std::size_t join = rank_of(f, std::move(gens));
    return static_cast<int>(m.dim() + ref.dim() - join);
  };
  std::vector<Rref> family;
  for (const Rref& m : maxes)
    if ((n - meet_dim(m)) % 2 == 0) family.push_back(m);

  std::unordered_map<std::string, uint32_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < family.size(); ++i) {
    labels.push_back(family[i].label());
    index[labels.back()] = static_cast<uint32_t>(i);
  }

  // lines: members of the family over a fixed totally singular subspace of
  // vector dimension n-2, collected per subspace from (M, subspace) flags
  std::vector<Rref> inner = subspaces(f, static_cast<std::size_t>(n),
                                      static_cast<std::size_t>(n) - 2);
  std::unordered_map<std::string, Line> pencil;
  for (std::size_t mi = 0; mi < family.size(); ++mi) {
    const Rref& m = family[mi];
    for (const Rref& sel : inner) {
      // lift: rows of sel are coefficient vectors over m's basis
      std::vector<Vec> rows;
      rows.reserve(sel.dim());
      for (const Vec& coef : sel.rows) {
        Vec v(spec.dim, 0);
        for (std::size_t r = 0; r < m.dim(); ++r)
          if (coef[r]) v = vec_add(f, v, vec_scale(f, coef[r], m.rows[r]));
        rows.push_back(std::move(v));
      }
      pencil[rref_of(f, std::move(rows)).label()].push_back(static_cast<uint32_t>(mi));
    }
  }
  std::vector<Line> lines;
  lines.reserve(pencil.size());
  for (auto& [_, l] : pencil)
    if (l.size() >= 2) lines.push_back(std::move(l));

  return make_geometry(family.size(), std::move(lines), std::move(labels));
}

}  // namespace liegeo
