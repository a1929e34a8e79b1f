#pragma once

#include "liegeo/forms.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/polar.hpp"

namespace liegeo {

/// Points: (k-1)-dimensional projective subspaces of PG(n,q). Lines: pencils
/// of such subspaces through a fixed (k-2)-space inside a fixed k-space.
/// Points are canonicalized and ordered by their RREF labels.
Geometry grassmannian_A(int n, int k, int q);

/// Points: (k-1)-dimensional singular subspaces of a verified polar space of
/// the given rank. For k < rank a line fixes an incident ((k-2)-space,
/// k-space) pair; for k = rank a line is all maximal singulars over a fixed
/// (k-2)-space.
Geometry polar_grassmannian(const Geometry& polar, int rank, int k);

/// Maximal singular subspaces, with lines the sets of maximals over a fixed
/// next-to-maximal singular subspace.
Geometry dual_polar(const Geometry& polar, int rank);

/// One family of maximal totally singular subspaces of a hyperbolic polar
/// space of rank n >= 3; a line is the set of family members over a fixed
/// totally singular subspace of projective dimension n-3. The family chosen
/// is the one containing the reference generator e_0, e_2, ..., e_{2n-2}.
Geometry half_spin(const FormSpec& hyperbolic);

}  // namespace liegeo
