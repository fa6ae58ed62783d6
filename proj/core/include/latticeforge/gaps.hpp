#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "latticeforge/polytope.hpp"
#include "latticeforge/vec.hpp"

namespace latticeforge {

// --- Layer geometry -------------------------------------------------------
//
// The layer L_s is the set of lattice points with non-negative coordinates
// summing to s.  One-layer polytopes are hulls of the diagonal simplex
// (vertices r*e_i) together with a subset B of the layer L_{r-1}; their
// normalized volumes are the object of study here.

// All points of L_s in lexicographic order.  Throws DomainError for d < 1 or
// s < 0, and ResourceError when the layer holds more than 10^6 points.
std::vector<LatticeVector> layer_points(int d, const Int& s);

// --- Chebyshev statistics on a layer ---------------------------------------

// Pairwise Chebyshev distances q_ik = max_j |b^i_j - b^k_j| within one layer,
// plus their maximum q (zero when |B| <= 1).  Requires: all points distinct,
// non-negative, with equal coordinate sums.
struct QStatistic {
  std::vector<std::vector<Int>> pairwise;
  Int q = 0;
};
QStatistic q_statistic(const std::vector<LatticeVector>& B);

// True when max_j |a_j - b_j| == 1 (the points are neighbours in the layer
// exchange graph).  Same preconditions as q_statistic, applied to the pair.
bool q_adjacent(const LatticeVector& a, const LatticeVector& b);

// Graph distance between two points of the same layer under the exchange
// moves x -> x + e_i - e_j that keep every coordinate non-negative.  BFS with
// an expansion cap; equals the Chebyshev distance on every layer.
Int layer_graph_distance(const LatticeVector& a, const LatticeVector& b);

// --- One-layer volumes ------------------------------------------------------

// Normalized volume of conv(diagonal simplex of parameter r, together with
// B), for B a subset of the layer L_{r-1}.  Exact.  For d == 3 this is the
// closed prismatoid form r^2 + r*s(B) + A2(B) where s(B) = (r-1) - sum of
// coordinatewise minima and A2 is the normalized area of B projected onto the
// first two coordinates; other dimensions fall back to a hull computation.
Int layered_volume(int d, const Int& r, const std::vector<LatticeVector>& B);

// The polytope realizing layered_volume: hull of {r*e_i} and B.
ConvexLatticePolytope realize_layered(int d, const Int& r,
                                      const std::vector<LatticeVector>& B);

// Enumerate subsets B of the layer L_{r-1} in depth-first order over the
// lexicographically sorted layer, invoking fn(B, volume, q) at every visited
// non-empty subset.  When prune_at >= 0, subsets whose volume reaches
// prune_at are reported but not extended; because volumes are monotone under
// adding points, every subset with volume < prune_at is still visited, so the
// enumeration is complete below the threshold.
void for_each_layer_subset(
    int d, const Int& r, const Int& prune_at,
    const std::function<void(const std::vector<LatticeVector>&, const Int&,
                             const Int&)>& fn);

// --- Value-set reports ------------------------------------------------------

struct GapInterval {
  Int lo;
  Int hi;  // inclusive
};

struct ValueSetReport {
  int d = 0;
  Int r = 0;
  std::string strategy;    // "exhaustive-bfs", "layered-full",
                           // "layered-pruned", or "layered-sampled"
  std::vector<Int> achieved;  // sorted, deduplicated normalized volumes
  Int complete_below = 0;  // every value < this is certified present/absent
  std::vector<GapInterval> gaps;  // maximal absent runs in [0, cap] where
                                  // cap = min(r^d, complete_below - 1)
  std::map<Int, std::vector<LatticeVector>> witnesses;  // value -> generators
};

// Rebuild the witness polytope recorded for value v: the hull of the diagonal
// simplex vertices together with the stored generator points.  Throws
// DomainError when v has no witness in the report.
ConvexLatticePolytope realize_witness(const ValueSetReport& report,
                                      const Int& v);

// Every achievable volume over the whole family: breadth-first search over
// distinct hulls, starting from the diagonal simplex and adjoining one point
// of coordinate sum < r at a time, memoized by sorted vertex set.  Requires
// the count of candidate points to stay within point_budget (default 24 when
// negative); throws ResourceError past the budget, suggesting the layered
// strategy.
ValueSetReport value_set_exhaustive(int d, const Int& r,
                                    const Int& point_budget = -1);

// Volumes of one-layer polytopes conv(diagonal simplex, B), B within the top
// layer L_{r-1}.  With samples == 0 the enumeration is exhaustive over all
// subsets (layer size capped at 28 points, i.e. r <= 7 in dimension 3) and
// certified complete below prune_at (or complete everywhere when prune_at is
// negative).  With samples > 0, that many pseudo-random subsets are drawn
// from the given seed instead; sampled reports certify nothing
// (complete_below == 0).
ValueSetReport value_set_layered(int d, const Int& r, const Int& prune_at = -1,
                                 std::uint64_t samples = 0,
                                 std::uint64_t seed = 1);

// --- Deep-layer lower bound -------------------------------------------------

// Minimum volume over single points adjoined from the layer L_{r-2}, two
// below the top.  Every such polytope has volume exactly 2*r^(d-1); the
// returned bound is that value and min_witness is the verified minimum.
struct DeepLayerBound {
  int d = 0;
  Int r = 0;
  Int bound = 0;        // 2 * r^(d-1)
  Int min_witness = 0;  // smallest volume observed (equals bound)
  LatticeVector argmin;
};
DeepLayerBound deep_layer_bound(int d, const Int& r);

// --- Case table for d == 3 ---------------------------------------------------

// Classification of one-layer volumes in dimension 3 by (|B|, q):
//   |B| == 1            -> v == r^2
//   |B| == 2            -> v == r^2 + q*r
//   |B| >= 3 and q == 1 -> v in {r^2+r+1, r^2+2r+1}
//   |B| >= 3 and q == 2 -> v in [r^2+2r, r^2+2r+4] or v >= r^2+3r
//   |B| >= 3 and q >= 3 -> v >= r^2+3r
// verify_case_table enumerates subsets of the top layer (pruned at prune_at
// when non-negative) and records every violation.  Pruning at r^2+3r keeps
// the check complete: unvisited subsets all have volume >= r^2+3r by
// monotonicity, which satisfies their row of the table outright.
struct CaseViolation {
  std::vector<LatticeVector> B;
  Int volume;
  Int q;
  std::string rule;  // the row of the table that failed
};
struct CaseTableReport {
  Int r = 0;
  Int checked = 0;  // visited subsets
  bool ok = false;
  std::vector<CaseViolation> violations;
};
CaseTableReport verify_case_table(const Int& r, const Int& prune_at = -1);

// --- Gap certificates (d == 3, r in {6, 7}) ---------------------------------

struct IntervalCertificate {
  Int lo;
  Int hi;
  std::string status;       // "empty", "achieved", or "violated"
  std::vector<Int> values;  // offenders for gap windows; attained values
                            // (or the missing ones, on violation) otherwise
};
struct GapTheoremCertificate {
  Int r = 0;
  Int deep_bound = 0;  // 2*r^2, volume floor once layer L_{r-2} is touched
  bool ok = false;
  std::vector<IntervalCertificate> intervals;
};

// Certify the three volume gaps above r^2 in dimension 3:
//   [r^2+1, r^2+r-1], [r^2+r+2, r^2+2r-1], [r^2+2r+5, r^2+3r-1] are empty,
// and [r^2+2r, r^2+2r+4] is fully achieved.  Combines the pruned layered
// enumeration (complete below r^2+3r) with the deep-layer bound 2r^2 that
// covers every polytope reaching below the top layer.  Requires r in {6, 7}.
GapTheoremCertificate verify_gap_theorems(const Int& r);

// Explicit witness sets B within the top layer realizing every volume in
// [r^2+2r, r^2+2r+4], for any r >= 6 in dimension 3.  Each witness is
// verified exactly (closed form and hull agree on the claimed value) before
// being returned.
std::map<Int, std::vector<LatticeVector>> corollary_witnesses(const Int& r);

}  // namespace latticeforge
