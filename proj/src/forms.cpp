#include "liegeo/forms.hpp"

#include <algorithm>
#include <unordered_set>

#include "liegeo/errors.hpp"

namespace liegeo {

int FormSpec::witt_index() const {
  switch (kind) {
    case FormKind::Symplectic:
    case FormKind::Hyperbolic:
      return static_cast<int>(dim) / 2;
    case FormKind::Parabolic:
      return static_cast<int>(dim - 1) / 2;
    case FormKind::Elliptic:
      return static_cast<int>(dim) / 2 - 1;
  }
  return 0;
}

std::string FormSpec::name() const {
  std::string k;
  switch (kind) {
    case FormKind::Symplectic: k = "sp"; break;
    case FormKind::Hyperbolic: k = "o+"; break;
    case FormKind::Parabolic: k = "o"; break;
    case FormKind::Elliptic: k = "o-"; break;
  }
  return "polar:" + k + ":" + std::to_string(dim) + ":" + std::to_string(q);
}

FormContext::FormContext(FormSpec spec) : spec_(spec), gf_(spec.q) {
  switch (spec_.kind) {
    case FormKind::Symplectic:
      if (spec_.dim % 2) throw InputError("symplectic form needs even dimension");
      break;
    case FormKind::Hyperbolic:
      if (spec_.dim % 2) throw InputError("hyperbolic form needs even dimension");
      break;
    case FormKind::Parabolic:
      if (spec_.dim % 2 == 0) throw InputError("parabolic form needs odd dimension");
      break;
    case FormKind::Elliptic:
      if (spec_.dim % 2) throw InputError("elliptic form needs even dimension");
      break;
  }
  for (const Vec& v : projective_points(gf_, spec_.dim))
    if (singular_point(v)) points_.push_back(v);
  for (std::size_t i = 0; i < points_.size(); ++i)
    index_[vec_label(points_[i])] = static_cast<uint32_t>(i);
  perp_.assign(points_.size(), DynBitset(points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i; j < points_.size(); ++j)
      if (bilin(points_[i], points_[j]) == 0) {
        perp_[i].set(j);
        perp_[j].set(i);
      }
}

uint8_t FormContext::quad(const Vec& v) const {
  const Gf& f = gf_;
  uint8_t s = 0;
  switch (spec_.kind) {
    case FormKind::Symplectic:
      return 0;
    case FormKind::Hyperbolic:
      for (std::size_t i = 0; i + 1 < spec_.dim; i += 2)
        s = f.add(s, f.mul(v[i], v[i + 1]));
      return s;
    case FormKind::Parabolic:
      s = f.mul(v[0], v[0]);
      for (std::size_t i = 1; i + 1 < spec_.dim; i += 2)
        s = f.add(s, f.mul(v[i], v[i + 1]));
      return s;
    case FormKind::Elliptic: {
      // anisotropic binary part N(x0,x1)
      uint8_t n = 0;
      if (spec_.q == 3) {
        n = f.add(f.mul(v[0], v[0]), f.mul(v[1], v[1]));
      } else {
        // q = 2 or 4: x0^2 + x0 x1 + delta x1^2 with delta = 1 (q=2), w (q=4)
        uint8_t delta = spec_.q == 2 ? 1 : 2;
        n = f.add(f.mul(v[0], v[0]),
                  f.add(f.mul(v[0], v[1]), f.mul(delta, f.mul(v[1], v[1]))));
      }
      s = n;
      for (std::size_t i = 2; i + 1 < spec_.dim; i += 2)
        s = f.add(s, f.mul(v[i], v[i + 1]));
      return s;
    }
  }
  return 0;
}

uint8_t FormContext::bilin(const Vec& u, const Vec& v) const {
  const Gf& f = gf_;
  if (spec_.kind == FormKind::Symplectic) {
    uint8_t s = 0;
    for (std::size_t i = 0; i + 1 < spec_.dim; i += 2) {
      s = f.add(s, f.mul(u[i], v[i + 1]));
      s = f.sub(s, f.mul(u[i + 1], v[i]));
    }
    return s;
  }
  // polarization: B(u,v) = Q(u+v) - Q(u) - Q(v)
  uint8_t s = quad(vec_add(f, u, v));
  s = f.sub(s, quad(u));
  s = f.sub(s, quad(v));
  return s;
}

bool FormContext::singular_point(const Vec& v) const {
  if (spec_.kind == FormKind::Symplectic) return true;
  return quad(v) == 0;
}

uint32_t FormContext::point_index(const Vec& canonical) const {
  auto it = index_.find(vec_label(canonical));
  if (it == index_.end()) throw VerificationError("vector is not a singular point");
  return it->second;
}

std::vector<Rref> FormContext::totally_singular(std::size_t k) const {
  if (k == 0) return {Rref{}};
  std::vector<Rref> level;
  level.reserve(points_.size());
  for (const Vec& v : points_) level.push_back(Rref{{v}});
  for (std::size_t cur = 1; cur < k; ++cur) {
    std::unordered_set<Rref, Rref::Hash> next;
    for (const Rref& u : level) {
      DynBitset cand(points_.size());
      bool first = true;
      for (const Vec& row : u.rows) {
        uint32_t ri = point_index(normalize_point(gf_, row));
        if (first) {
          cand = perp_[ri];
          first = false;
        } else {
          cand &= perp_[ri];
        }
      }
      cand.for_each([&](std::size_t pi) {
        const Vec& v = points_[pi];
        std::vector<Vec> gens = u.rows;
        gens.push_back(v);
        Rref span = rref_of(gf_, std::move(gens));
        if (span.dim() == cur + 1) next.insert(std::move(span));
      });
    }
    level.assign(next.begin(), next.end());
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<uint32_t> FormContext::members(const Rref& s) const {
  // all nonzero combinations of the basis rows, normalized and deduplicated
  std::size_t k = s.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<std::size_t>(gf_.q());
  std::vector<uint32_t> out;
  std::unordered_set<std::string> seen;
  for (std::size_t code = 1; code < total; ++code) {
    Vec v(spec_.dim, 0);
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      uint8_t coef = static_cast<uint8_t>(c % gf_.q());
      c /= gf_.q();
      if (coef) v = vec_add(gf_, v, vec_scale(gf_, coef, s.rows[i]));
    }
    Vec p = normalize_point(gf_, std::move(v));
    std::string key = vec_label(p);
    if (seen.insert(key).second) out.push_back(point_index(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassicalPolar build_classical(const FormSpec& spec) {
  if (spec.witt_index() < 2)
    throw InputError("form " + spec.name() + " has Witt index < 2");
  std::size_t bound = spec.q == 2 ? 12 : (spec.q == 3 ? 9 : 7);
  if (spec.dim > bound)
    throw InputError("dimension too large for desk-scale enumeration");
  FormContext ctx(spec);
  std::size_t n = ctx.points().size();

  std::vector<Line> lines;
  for (const Rref& l : ctx.totally_singular(2)) lines.push_back(ctx.members(l));

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const Vec& v : ctx.points()) labels.push_back(vec_label(v));

  return ClassicalPolar{make_geometry(n, std::move(lines), std::move(labels)),
                        spec, spec.witt_index()};
}

}  // namespace liegeo
