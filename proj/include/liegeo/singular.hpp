#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegeo/geometry.hpp"

namespace liegeo {

/// A subspace whose points are pairwise collinear. dim is the projective
/// dimension when the induced geometry is a projective space, else unset.
struct SingularSubspace {
  DynBitset points;
  bool projective = false;
  std::optional<int> dim;
};

struct SingularCheck {
  bool ok = false;
  std::string reason;
  SingularSubspace sub;
};

/// Accepts S iff it is a subspace with pairwise collinear points; fills the
/// projective flag and dimension from the induced geometry.
SingularCheck is_singular(const Geometry& g, const DynBitset& s);

/// Projective-space test on a geometry whose points are pairwise collinear:
/// two points on exactly one line, plus the Veblen-Young condition on every
/// pair of lines meeting in a point. dim comes from a greedy maximal chain of
/// subspaces. Singletons give dim 0, the empty case is not accepted here.
bool is_projective_space(const Geometry& g, int& dim);

/// All maximal cliques of the collinearity graph, Bron-Kerbosch with pivot,
/// canonically ordered.
std::vector<DynBitset> maximal_cliques(const Geometry& g);

/// Maximal cliques that are subspaces, as SingularSubspace values.
std::vector<SingularSubspace> enumerate_maximal_singulars(const Geometry& g);

/// All singular subspaces of projective dimension exactly d (level-wise
/// closure extension starting from the line set). d >= 1.
std::vector<DynBitset> singular_subspaces_of_dim(const Geometry& g, int d);

}  // namespace liegeo
