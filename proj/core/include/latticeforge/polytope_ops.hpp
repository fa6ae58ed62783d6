#pragma once

#include <utility>
#include <vector>

#include "latticeforge/hull.hpp"
#include "latticeforge/polytope.hpp"

namespace latticeforge {

// Corner simplex: conv{0, r*e_1, ..., r*e_d}; full-dimensional, volume r^d.
ConvexLatticePolytope corner_simplex(int d, const Int& r);

// Diagonal simplex: conv{r*e_1, ..., r*e_d}; lies in the hyperplane sum = r,
// so it is degenerate with dimension d-1 (a segment for d = 2, etc.).
ConvexLatticePolytope diagonal_simplex(int d, const Int& r);

// Membership in the sandwich family: diagonal_simplex(r) within P within
// corner_simplex(r). Exact facet tests on both inclusions.
bool in_family(const ConvexLatticePolytope& P, int d, const Int& r);

// r^d minus the normalized volume; requires family membership.
Int missed_volume(const ConvexLatticePolytope& P, int d, const Int& r);

// Hull of {U x + t : x vertex of P}. U must have |det| = 1, which preserves
// the lattice and the normalized volume.
ConvexLatticePolytope apply_unimodular(const ConvexLatticePolytope& P, const IntMatrix& U,
                                       const LatticeVector& t);

// Lexicographically smallest sorted vertex list over all d! coordinate
// permutations. Identical for polytopes related by an axis permutation.
std::vector<LatticeVector> canonical_form(const ConvexLatticePolytope& P);

// All 1-faces as vertex pairs (each pair sorted, list sorted). Requires a
// full-dimensional polytope with d <= 4.
std::vector<std::pair<LatticeVector, LatticeVector>> faces_1(const ConvexLatticePolytope& P);

}  // namespace latticeforge
