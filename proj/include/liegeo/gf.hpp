#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace liegeo {

/// Table-driven arithmetic for GF(2), GF(3) and GF(4). GF(4) elements are
/// {0, 1, w, w+1} encoded 0..3 with w^2 = w + 1.
class Gf {
public:
  explicit Gf(int q);

  int q() const { return q_; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[a][b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a][neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a][b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const { return inv_[a]; }

private:
  int q_;
  std::array<std::array<uint8_t, 4>, 4> add_{};
  std::array<std::array<uint8_t, 4>, 4> mul_{};
  std::array<uint8_t, 4> neg_{};
  std::array<uint8_t, 4> inv_{};
};

using Vec = std::vector<uint8_t>;  // coordinates over GF(q)

Vec vec_add(const Gf& f, const Vec& a, const Vec& b);
Vec vec_scale(const Gf& f, uint8_t c, const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_label(const Vec& a);

/// Row-reduced echelon basis; rows ordered by pivot column. The RREF is the
/// canonical representative of a subspace, so equality of matrices is
/// equality of subspaces.
struct Rref {
  std::vector<Vec> rows;
  bool operator==(const Rref& o) const { return rows == o.rows; }
  bool operator<(const Rref& o) const { return rows < o.rows; }
  std::size_t dim() const { return rows.size(); }
  std::string label() const;
  std::size_t hash() const;
  struct Hash {
    std::size_t operator()(const Rref& r) const { return r.hash(); }
  };
};

/// Canonical RREF of the span of the given vectors.
Rref rref_of(const Gf& f, std::vector<Vec> gens);

/// Dimension of the span (Gaussian elimination, does not canonicalize).
std::size_t rank_of(const Gf& f, std::vector<Vec> gens);

/// All nonzero canonical 1-space representatives of GF(q)^d: first nonzero
/// coordinate equals 1. Lexicographic order.
std::vector<Vec> projective_points(const Gf& f, std::size_t d);

/// The q+1 canonical 1-space representatives inside the span of two
/// independent vectors.
std::vector<Vec> pencil_points(const Gf& f, const Vec& a, const Vec& b);

/// All k-dimensional subspaces of GF(q)^d as canonical RREFs, lexicographic.
std::vector<Rref> subspaces(const Gf& f, std::size_t d, std::size_t k);

/// Canonical 1-space representative of a nonzero vector.
Vec normalize_point(const Gf& f, Vec v);

}  // namespace liegeo
