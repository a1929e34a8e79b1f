#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "liegeo/bitset.hpp"
#include "liegeo/gf.hpp"
#include "liegeo/geometry.hpp"

namespace liegeo {

enum class FormKind { Symplectic, Hyperbolic, Parabolic, Elliptic };

/// A reflexive form on GF(q)^dim. Fixed normal forms, so point labels are
/// reproducible across runs:
///   symplectic  B = sum x_{2i} y_{2i+1} - x_{2i+1} y_{2i}
///   hyperbolic  Q = sum x_{2i} x_{2i+1}
///   parabolic   Q = x_0^2 + sum_{i>=1} x_{2i-1} x_{2i}
///   elliptic    Q = N(x_0,x_1) + sum_{i>=1} x_{2i} x_{2i+1}, N anisotropic
struct FormSpec {
  FormKind kind;
  int q;
  std::size_t dim;

  int witt_index() const;
  std::string name() const;
};

/// Evaluates the chosen form and enumerates singular points and totally
/// singular subspaces.
class FormContext {
public:
  explicit FormContext(FormSpec spec);

  const FormSpec& spec() const { return spec_; }
  const Gf& field() const { return gf_; }

  uint8_t quad(const Vec& v) const;
  uint8_t bilin(const Vec& u, const Vec& v) const;
  /// 1-space <v> lies on the polar geometry.
  bool singular_point(const Vec& v) const;

  /// Canonical representatives of singular 1-spaces, lexicographic.
  const std::vector<Vec>& points() const { return points_; }
  uint32_t point_index(const Vec& canonical) const;

  /// Pairwise-perp bitset row of singular point i over the singular points.
  const DynBitset& perp_row(uint32_t i) const { return perp_[i]; }

  /// All totally singular subspaces of vector dimension k, canonical RREFs.
  std::vector<Rref> totally_singular(std::size_t k) const;

  /// Point indices spanned by a totally singular subspace.
  std::vector<uint32_t> members(const Rref& s) const;

private:
  FormSpec spec_;
  Gf gf_;
  std::vector<Vec> points_;
  std::unordered_map<std::string, uint32_t> index_;
  std::vector<DynBitset> perp_;
};

/// A classical polar space together with its construction data.
struct ClassicalPolar {
  Geometry geom;
  FormSpec spec;
  int rank = 0;
};

/// Points are singular 1-spaces, lines totally singular 2-spaces. Labels hold
/// the canonical vector representatives. Rejects Witt index < 2.
ClassicalPolar build_classical(const FormSpec& spec);

}  // namespace liegeo
