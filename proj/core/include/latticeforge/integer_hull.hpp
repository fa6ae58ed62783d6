#pragma once

#include <vector>

#include "latticeforge/polytope.hpp"
#include "latticeforge/regions.hpp"
#include "latticeforge/scaling.hpp"

namespace latticeforge {

// Target exponents of the radius scans: vertex counts, positive-vertex
// counts and cap-volume gaps of integer hulls of round regions grow like
// r^{d(d-1)/(d+1)}, while the deepest hull vertex approaches the sphere like
// r^{-(d-1)/(d+1)}.
double hull_growth_exponent(int d);
double closeness_exponent(int d);

// Report on the integer hull (convex hull of the lattice points) of a round
// region of radius r. Exact fields throughout; max_closeness is the only
// decimal and is backed by the exact witness min_vertex_norm_sq.
struct IntegerHullReport {
  RegionShape shape = RegionShape::ball;
  int d = 0;
  Rational r = 0;
  ConvexLatticePolytope hull;
  Int point_count = 0;  // lattice points in the region
  Int f0 = 0;           // number of hull vertices
  std::vector<LatticeVector> positive_vertices;  // vertices with all coordinates > 0
  Int min_vertex_norm_sq = 0;  // min over vertices of sum x_i^2, exact
  Dec max_closeness = 0;       // r - sqrt(min_vertex_norm_sq): how deep the deepest vertex sits
};

// Builds the report for shape in {simplex, ball, orthant_ball, paraboloid}.
// The region's exact lattice point count must stay within the budget
// (budget < 0 selects default_point_budget()); hull construction itself only
// touches the per-column extreme candidates.
IntegerHullReport integer_hull(RegionShape shape, int d, const Rational& r,
                               const Int& budget = -1);

// Decides r - sqrt(norm_sq) <= t exactly (no floating point).
bool closeness_at_most(const Rational& r, const Int& norm_sq, const Rational& t);

// Number of lattice points z != x with |z| <= r and |2x - z| <= r. A zero
// count certifies that x cannot be a midpoint of two distinct lattice points
// of the ball, hence is extreme among them. Enumeration is confined to the
// box |z - x|^2 <= r^2 - |x|^2 that contains the lens, so it is cheap for
// points near the sphere. Requires |x| <= r.
Int minkowski_lens_count(int d, const Rational& r, const LatticeVector& x);

// Hull of the region's lattice points with a finite set of points removed.
// Per-column extremes of the surviving set are found by walking past removed
// points from each column end. Throws DomainError if nothing survives.
ConvexLatticePolytope subset_hull(const Region& region,
                                  const std::vector<LatticeVector>& removed,
                                  const Int& budget = -1);

// Euclidean volume of the region itself, certified to at least 20 correct
// decimal digits (supported for every non-polytope shape, d <= 4).
Dec region_volume(RegionShape shape, int d, const Rational& r);

// Volume the integer hull misses against the full round region.
struct CapVolume {
  Int hull_normalized = 0;      // d! * hull volume, exact
  Rational hull_volume = 0;     // exact Euclidean hull volume
  Dec region_vol = 0;           // Euclidean region volume
  Dec gap = 0;                  // region_vol - hull_volume, provably >= 0
};
CapVolume missed_cap_volume(RegionShape shape, int d, const Rational& r, const Int& budget = -1);

// Checks that for every z >= 0 with sum z_i^2 <= r^2 the lifted point
// (z, sum z_i^2) is a vertex of the paraboloid region's integer hull, i.e.
// the hull has at least as many vertices as the region has admissible bases.
// Supported for d in {2, 3}.
struct ParaboloidCheck {
  bool ok = false;
  Int expected = 0;  // number of admissible base points z
  std::vector<LatticeVector> counterexamples;
};
ParaboloidCheck paraboloid_vertex_check(int d, const Rational& r);

// Radius scans. Each builds one report per radius, collects the quantity
// into a power-law fit against the target exponent above, and enforces the
// per-radius exact invariants as it goes.
//
// closeness_scan additionally certifies every hull vertex of every radius
// via minkowski_lens_count == 0.
ScalingFit closeness_scan(int d, const std::vector<Rational>& radii);
ScalingFit vertex_count_scan(RegionShape shape, int d, const std::vector<Rational>& radii);
ScalingFit cap_gap_scan(RegionShape shape, int d, const std::vector<Rational>& radii);
// Orthant-ball positive-vertex counts |X|.
ScalingFit positive_vertex_scan(int d, const std::vector<Rational>& radii);
// Gap 2^{-d} omega_d r^d - vol hull(points(orthant ball) minus X); each row
// is certified non-negative before fitting.
ScalingFit positive_vertex_gap_scan(int d, const std::vector<Rational>& radii);

}  // namespace latticeforge
