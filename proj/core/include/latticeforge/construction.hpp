#pragma once

#include <optional>
#include <vector>

#include "latticeforge/decomposition.hpp"
#include "latticeforge/polytope_ops.hpp"

namespace latticeforge {

// One carved-out simplex: index i in [0, d], its d+1 vertices (possibly
// affinely degenerate), and the normalized volume it claims to remove. The
// first listed vertex is the anchor — the corner the deletion consumes.
struct SimplexSpec {
  int i = 0;
  std::vector<LatticeVector> vertices;
  Int claimed_volume;
};

// The full peeling record: starting from the corner simplex S(r), deleting
// delta[k] yields P[k] = conv(Y + pool) where Y is the diagonal vertex set
// {r e_j} and the pool accumulates the retained sets X[0..k] (vertices of
// each carved simplex minus its anchor) while dropping the anchor of every
// positive-volume deletion — the anchors of the later wedges start out in
// X[0], and each deletion consumes its own corner.
struct PeelingSequence {
  int d = 0;
  Int r;
  std::vector<LatticeVector> Y;
  std::vector<SimplexSpec> deltas;
  std::vector<std::vector<LatticeVector>> X;
  std::vector<ConvexLatticePolytope> P;
};

enum class ConstructionRoute { thin_cut, peeling };

struct Construction {
  ConvexLatticePolytope P;
  ConstructionRoute route = ConstructionRoute::thin_cut;
  std::optional<GreedyDecomposition> expansion;  // set on the peeling route
  PeelingSequence sequence;                      // one step on the thin-cut route
};

// Corner simplex S(r) minus the thin simplex conv{0, m e_1, e_2, ..., e_d}:
// the part of S(r) with x_1 + m x_2 + ... + m x_d >= m. Exact volume
// r^d - m is verified; m = 0 returns S(r) unchanged. Requires 0 <= m <= r.
ConvexLatticePolytope thin_cut(int d, const Int& r, const Int& m);

// The thin cut as a one-step peeling sequence.
PeelingSequence thin_cut_sequence(int d, const Int& r, const Int& m);

// The i-th carved simplex anchored at e_i^* = 2 x0 e_i. The height parameter
// h is x_i for 1 <= i <= d-1 (claimed volume g^(i)(x_i)), the final
// remainder for i = d (claimed volume h), and ignored for i = 0 (claimed
// volume (2 x0)^d). All vertices are verified to lie in S(r) and the claimed
// volume is verified against the exact hull volume.
SimplexSpec build_delta(int d, const Int& r, int i, const Int& x0, const Int& h);

// For r > 2^d d! and 0 <= m <= (r - 2^d d!)^d, build P in the sandwich
// family with normalized volume exactly r^d - m: a thin cut when m <= r,
// otherwise the greedy expansion of m followed by carving delta_0..delta_d.
// The returned polytope is verified exactly (volume and family membership).
Construction construct_missed(int d, const Int& r, const Int& m);

// Replays a peeling sequence: every step must lose exactly the claimed
// volume, every stage must rebuild from its vertex sets, stay in the family,
// and nest in its predecessor. Returns false on any mismatch.
bool verify_additivity(const PeelingSequence& seq);

}  // namespace latticeforge
