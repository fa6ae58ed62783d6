#pragma once

#include <optional>
#include <vector>

#include "latticeforge/linalg.hpp"
#include "latticeforge/vec.hpp"

namespace latticeforge {

// Supporting halfspace normal . x <= offset with primitive integer normal.
struct Facet {
  LatticeVector normal;
  Int offset;

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

// A convex lattice polytope in ambient dimension d.
//
// Full-dimensional (dim == d): `vertices` are exactly the extreme points
// (sorted lexicographically) and `facets` the deduplicated supporting
// halfspaces; every vertex satisfies all facet inequalities, with equality on
// at least d facets of full normal rank.
//
// Degenerate (dim < d): `facets` is empty and `affine_basis` holds dim
// independent integer directions spanning the affine hull (anchored at
// vertices.front()); `vertices` are still exactly the extreme points.
// Normalized volume is 0 in that case.
struct ConvexLatticePolytope {
  int d = 0;
  int dim = -1;  // -1 encodes the empty polytope
  std::vector<LatticeVector> vertices;
  std::vector<Facet> facets;
  std::vector<LatticeVector> affine_basis;
  Int normalized_volume;  // d! * Euclidean volume, exact

  bool empty() const { return dim < 0; }
  bool full_dimensional() const { return dim == d; }

  // Exact membership test for a lattice point.
  bool contains(const LatticeVector& p) const;

  friend bool operator==(const ConvexLatticePolytope& a, const ConvexLatticePolytope& b) {
    return a.d == b.d && a.vertices == b.vertices;
  }
};

}  // namespace latticeforge
