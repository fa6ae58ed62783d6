#pragma once

#include <cstdint>
#include <vector>

#include "latticeforge/integer_hull.hpp"
#include "latticeforge/polytope_ops.hpp"

namespace latticeforge {

// Scale data for one corner-trimmed hull family. Members are built from the
// integer hull of the radius-r orthant ball by deleting a subset Z of its
// all-positive vertices and then rewriting the origin corner inside the
// corner simplex S(rho) so that every member reaches the same normalized
// volume v_target. The marked variant additionally deletes axis-end marker
// points (the i-th axis loses its last i lattice points), which breaks the
// axis-permutation symmetry; it trims to its own, slightly smaller target.
struct FamilySpec {
  int d = 0;
  Int r = 0;
  Int rho = 0;                         // corner scale, > 2^d d! and <= r/4
  std::vector<LatticeVector> X;        // all-positive hull vertices, lex sorted
  Rational V_target = 0;               // exact Euclidean target volume
  Int v_target = 0;                    // d! * V_target = v(Q(X))
  Int m_max = 0;                       // largest trim: v(Q(empty)) - v_target
  Int v_empty = 0;                     // v(Q(empty)), the untrimmed hull volume
  std::vector<LatticeVector> markers;  // axis-end marker points, lex sorted
  Int v_target_marked = 0;             // v(Q(X + markers))
  Int m_max_marked = 0;                // v(Q(markers)) - v_target_marked
};

// One family member: the subset hull Q_Z and its corner rewrite P_star,
// certified to hit the target volume exactly.
struct TrimmedPolytope {
  std::vector<LatticeVector> Z;        // removed positive vertices, lex sorted
  bool marked = false;
  std::vector<LatticeVector> removed;  // Z plus the markers when marked
  ConvexLatticePolytope Q_Z;
  Int m_Z = 0;        // v(Q_Z) - v_target; always >= 0
  Int v_target = 0;   // the target this member was trimmed to
  ConvexLatticePolytope P_star;
  std::vector<LatticeVector> canonical;  // axis-permutation canonical form
};

// An edge longer than fraction * r. When both endpoints lie on coordinate
// axis k the edge is tagged with axis = k and a is the endpoint nearer the
// origin; other long edges carry axis = -1.
struct LongEdge {
  int axis = -1;
  LatticeVector a, b;
};

struct LongEdgeReport {
  Rational fraction = 0;  // edges of Euclidean length > fraction * r listed
  bool adjusted = false;  // fraction lowered because rho exceeds r/10
  std::vector<LongEdge> edges;
};

// One census entry. The mask encodes Z: bit k set means the k-th
// lex-smallest positive vertex was removed. fresh marks rows whose canonical
// form had not been seen earlier in the sweep.
struct CensusRow {
  Int mask = 0;
  Int m = 0;
  Int f0 = 0;
  bool fresh = false;
};

struct CensusReport {
  int d = 0;
  Int r = 0;
  bool marked = false;
  bool sampled = false;
  std::uint64_t generated = 0;  // subsets trimmed
  std::uint64_t distinct = 0;   // distinct canonical forms
  std::uint64_t max_class = 0;  // largest canonical class, always <= d!
  std::size_t x_size = 0;
  Int v_target = 0;             // shared member volume (marked target if marked)
  double ratio = 0.0;           // distinct / generated
  double implied_exponent = 0.0;  // ln ln(2^|X|/d!) / ln(V), reported only
  std::vector<CensusRow> rows;  // in mask order
};

// Builds the family data at radius r: the orthant-ball integer hull, its
// positive vertex set X, the exact targets, and the smallest corner scale
// rho > 2^d d! whose corner cube (rho - 2^d d!)^d covers every trim, capped
// at r/4. Requires d in {2, 3}. Radii whose trims cannot fit under the cap
// raise DomainError reporting the largest trim and the cap.
FamilySpec base_family(int d, const Int& r);

// Smallest radius in [from, to] for which base_family succeeds; radii that
// fail the rho cap are skipped. DomainError when none qualifies.
Int first_feasible_radius(int d, const Int& from, const Int& to);

// Hull of the lattice points of the radius-r orthant ball with Z removed.
// Z must consist of positive hull vertices; the volume always lands between
// v_target and v_empty.
ConvexLatticePolytope subset_hull(const FamilySpec& spec,
                                  const std::vector<LatticeVector>& Z);

// Builds the member for Z: computes Q_Z and its trim m_Z, carves a corner
// polytope of missed volume m_Z inside S(rho), and replaces the origin
// vertex of Q_Z by that polytope's vertices. The exact volume identity
// v(P_star) == v_target certifies the rewrite; mismatch raises
// InvariantError carrying Z and m_Z.
TrimmedPolytope trim_to_volume(const FamilySpec& spec,
                               const std::vector<LatticeVector>& Z);

// Same pipeline with the axis-end markers also removed, trimmed to the
// marked target. The i-th axis edge of the result stops i points short of
// the sphere, so no axis permutation can map one member onto another.
TrimmedPolytope marker_variant(const FamilySpec& spec,
                               const std::vector<LatticeVector>& Z);

// All edges of P of Euclidean length > fraction * r (exact comparison),
// axis-collinear ones first. Edge enumeration needs d <= 4.
LongEdgeReport long_edges(const ConvexLatticePolytope& P, const Int& r,
                          const Rational& fraction = Rational(9, 10));

// Long edges of a family member, at threshold 9/10 when 10 rho <= r and at
// the recorded lowered threshold 7/10 otherwise (the corner rewrite shortens
// axis edges to length >= r - rho, which stays above 0.7 r under the cap
// while every non-axis edge stays far below it). Asserts the member has
// exactly d long edges, one per axis, each starting at alpha <= rho and
// ending at r e_k (k + 1 lattice points earlier on the k-th axis of a
// marked member).
LongEdgeReport family_long_edges(const FamilySpec& spec,
                                 const TrimmedPolytope& member);

// Sweeps subsets Z of X, trims each member, and counts distinct canonical
// forms. Exhaustive when sample == 0 (2^|X| must fit the budget, else
// ResourceError suggesting a sample); otherwise trims `sample` distinct
// uniform subsets drawn with the given seed. Verifies the class bounds:
// every canonical class has size <= d!, so distinct >= generated / d!, and
// a marked sweep yields all-distinct forms.
CensusReport census(const FamilySpec& spec, std::uint64_t budget = 1u << 20,
                    bool marked = false, std::uint64_t sample = 0,
                    std::uint64_t seed = 1);

}  // namespace latticeforge
