#pragma once

#include <vector>

#include "latticeforge/polytope.hpp"

namespace latticeforge {

// Boundary triangulation produced as a by-product of hull construction.
// Simplices index into `points`; they may use points that are not extreme
// (points lying on the final boundary that were inserted early) — harmless
// for volume, which is what this is for.
struct HullTriangulation {
  std::vector<LatticeVector> points;
  std::vector<std::vector<int>> simplices;  // each has exactly d point indices
};

// Exact convex hull of a finite lattice point set in ambient dimension d.
// Handles degenerate inputs (hull of dimension < d) as first-class results.
// Throws DomainError on empty input or mismatched coordinate sizes.
ConvexLatticePolytope convex_hull(const std::vector<LatticeVector>& points, int d,
                                  HullTriangulation* triangulation_out = nullptr);

// d! * volume via the cone over the boundary triangulation from `apex`,
// which must lie inside the hull (any vertex works). Simplices whose
// supporting hyperplane passes through the apex contribute zero, so the sum
// is apex-independent; tests exercise that invariant.
Int cone_volume(const HullTriangulation& tri, const LatticeVector& apex, int d);

// Convenience: d! * volume of a polytope (recomputed from its vertices).
Int normalized_volume(const ConvexLatticePolytope& poly);

}  // namespace latticeforge
