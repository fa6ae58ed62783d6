#include "latticeforge/construction.hpp"

#include <algorithm>
#include <set>

#include "latticeforge/errors.hpp"

namespace latticeforge {

namespace {

std::vector<LatticeVector> diagonal_vertices(int d, const Int& r) {
  std::vector<LatticeVector> Y;
  for (int j = 0; j < d; ++j) Y.push_back(axis_point(d, j, r));
  return Y;
}

bool inside_corner_simplex(const LatticeVector& v, const Int& r) {
  return all_nonnegative(v) && coordinate_sum(v) <= r;
}

// Retained vertices of a carved simplex: its distinct vertices minus the
// anchor point, which is the one vertex the deletion removes from the
// polytope. A degenerate cut (claimed volume 0) deletes nothing, so every
// vertex — anchor included — survives into the next stage.
std::vector<LatticeVector> retained_vertices(const SimplexSpec& delta,
                                             const LatticeVector& anchor) {
  std::vector<LatticeVector> X;
  for (const auto& v : delta.vertices)
    if (delta.claimed_volume == 0 || !(v == anchor)) X.push_back(v);
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  return X;
}

}  // namespace

ConvexLatticePolytope thin_cut(int d, const Int& r, const Int& m) {
  require_domain(d >= 1 && r >= 1, "thin_cut: need d >= 1 and r >= 1");
  require_domain(m >= 0, "thin_cut: the cut volume must be nonnegative");
  if (m > r) {
    throw DomainError("thin_cut: cut volume " + m.str() + " exceeds the bound r = " + r.str());
  }
  if (m == 0) return corner_simplex(d, r);
  // Vertices of S(r) on the far side of x_1 + m x_2 + ... + m x_d = m,
  // plus the section of that hyperplane with the edges of S(r) at 0.
  std::vector<LatticeVector> pts = diagonal_vertices(d, r);
  pts.push_back(axis_point(d, 0, m));
  for (int j = 1; j < d; ++j) pts.push_back(axis_point(d, j, 1));
  auto P = convex_hull(pts, d);
  require_invariant(P.normalized_volume == int_pow(r, d) - m,
                    "thin_cut: volume mismatch at d=" + std::to_string(d) + " r=" + r.str() +
                        " m=" + m.str());
  require_invariant(in_family(P, d, r), "thin_cut: result left the family");
  return P;
}

PeelingSequence thin_cut_sequence(int d, const Int& r, const Int& m) {
  PeelingSequence seq;
  seq.d = d;
  seq.r = r;
  seq.Y = diagonal_vertices(d, r);
  SimplexSpec cut;
  cut.i = 0;
  cut.vertices.push_back(LatticeVector(static_cast<std::size_t>(d)));
  cut.vertices.push_back(axis_point(d, 0, m));
  for (int j = 1; j < d; ++j) cut.vertices.push_back(axis_point(d, j, 1));
  cut.claimed_volume = m;
  seq.deltas.push_back(cut);
  seq.X.push_back(retained_vertices(cut, LatticeVector(static_cast<std::size_t>(d))));
  seq.P.push_back(thin_cut(d, r, m));
  return seq;
}

SimplexSpec build_delta(int d, const Int& r, int i, const Int& x0, const Int& h) {
  require_domain(d >= 2, "build_delta: need d >= 2");
  require_domain(i >= 0 && i <= d, "build_delta: index must lie in [0, d]");
  const Int cap = int_pow(2, d) * factorial(d);
  if (r <= cap) {
    throw DomainError("build_delta: r = " + r.str() + " must exceed 2^d d! = " + cap.str());
  }
  if (x0 < 1) {
    throw DomainError("build_delta: anchor scale x0 = " + x0.str() + " must be at least 1");
  }
  if (2 * x0 > r - cap) {
    throw DomainError("build_delta: 2 x0 = " + Int(2 * x0).str() + " exceeds r - 2^d d! = " +
                      Int(r - cap).str());
  }
  SimplexSpec out;
  out.i = i;
  if (i == 0) {
    out.vertices.push_back(LatticeVector(static_cast<std::size_t>(d)));
    for (int j = 0; j < d; ++j) out.vertices.push_back(axis_point(d, j, 2 * x0));
    out.claimed_volume = int_pow(2 * x0, d);
  } else {
    if (i < d) {
      if (h < 0 || h > x0) {
        throw DomainError("build_delta: step argument h = " + h.str() +
                          " must lie in [0, x0 = " + x0.str() + "]");
      }
    } else if (h < 0 || h > cap) {
      throw DomainError("build_delta: remainder h = " + h.str() + " must lie in [0, 2^d d! = " +
                        cap.str() + "]");
    }
    const int ax = i - 1;  // anchor axis, 0-based
    LatticeVector anchor = axis_point(d, ax, 2 * x0);
    out.vertices.push_back(anchor);
    // Edge along the anchor axis: constant height for i < d, the remainder
    // for i = d.
    Int height = i < d ? int_pow(2, d) * factorial(d) / factorial(d - i) : h;
    LatticeVector tip = anchor;
    tip[ax] += height;
    out.vertices.push_back(tip);
    for (int j = 0; j < ax; ++j) {
      LatticeVector v = anchor;
      v[j] += 1;
      v[ax] -= 1;
      out.vertices.push_back(v);
    }
    for (int j = ax + 1; j < d; ++j) {
      LatticeVector v = anchor;
      v[j] += h;
      v[ax] -= h;
      out.vertices.push_back(v);
    }
    out.claimed_volume = i < d ? g_derivative(d, i, h) : h;
  }
  require_invariant(out.vertices.size() == static_cast<std::size_t>(d) + 1,
                    "build_delta: a carved simplex lists d + 1 vertices");
  for (const auto& v : out.vertices) {
    require_invariant(inside_corner_simplex(v, r), "build_delta: vertex " + v.str() +
                                                       " left S(" + r.str() + ")");
  }
  auto hull = convex_hull(out.vertices, d);
  require_invariant(hull.normalized_volume == out.claimed_volume,
                    "build_delta: exact volume " + hull.normalized_volume.str() +
                        " differs from claimed " + out.claimed_volume.str());
  return out;
}

Construction construct_missed(int d, const Int& r, const Int& m) {
  require_domain(d >= 2, "construct_missed: need d >= 2");
  const Int cap = int_pow(2, d) * factorial(d);
  if (r <= cap) {
    throw DomainError("construct_missed: r = " + r.str() + " must exceed 2^d d! = " + cap.str());
  }
  const Int limit = int_pow(r - cap, d);
  if (m < 0 || m > limit) {
    throw DomainError("construct_missed: missed volume " + m.str() +
                      " is outside [0, (r - 2^d d!)^d = " + limit.str() + "]");
  }

  Construction out;
  if (m <= r) {
    out.route = ConstructionRoute::thin_cut;
    out.sequence = thin_cut_sequence(d, r, m);
    out.P = out.sequence.P.back();
  } else {
    out.route = ConstructionRoute::peeling;
    GreedyDecomposition expansion = decompose(d, m);
    const Int& x0 = expansion.xs[0];

    PeelingSequence seq;
    seq.d = d;
    seq.r = r;
    seq.Y = diagonal_vertices(d, r);
    std::set<LatticeVector> kept;
    for (int i = 0; i <= d; ++i) {
      Int h = i == 0 ? Int(0) : (i < d ? expansion.xs[i] : expansion.remainder);
      SimplexSpec delta = build_delta(d, r, i, x0, h);
      LatticeVector anchor =
          i == 0 ? LatticeVector(static_cast<std::size_t>(d)) : axis_point(d, i - 1, 2 * x0);
      seq.deltas.push_back(delta);
      seq.X.push_back(retained_vertices(delta, anchor));
      // A deletion with positive volume consumes its anchor vertex; the
      // anchors of the later wedges all sit in X_0, so they must leave the
      // vertex pool as their wedge is carved.
      if (delta.claimed_volume > 0) kept.erase(anchor);
      for (const auto& v : seq.X.back()) kept.insert(v);
      std::vector<LatticeVector> pts = seq.Y;
      pts.insert(pts.end(), kept.begin(), kept.end());
      seq.P.push_back(convex_hull(pts, d));
    }
    out.expansion = std::move(expansion);
    out.sequence = std::move(seq);
    out.P = out.sequence.P.back();
  }

  require_invariant(out.P.normalized_volume == int_pow(r, d) - m,
                    "construct_missed: exact volume " + out.P.normalized_volume.str() +
                        " differs from the target " + (int_pow(r, d) - m).str() + " at d=" +
                        std::to_string(d) + " r=" + r.str() + " m=" + m.str());
  require_invariant(in_family(out.P, d, r), "construct_missed: result left the family at d=" +
                                                std::to_string(d) + " r=" + r.str() +
                                                " m=" + m.str());
  return out;
}

bool verify_additivity(const PeelingSequence& seq) {
  if (seq.d < 1 || seq.r < 1) return false;
  const std::size_t n = seq.deltas.size();
  if (seq.X.size() != n || seq.P.size() != n || n == 0) return false;
  if (seq.Y != diagonal_vertices(seq.d, seq.r)) return false;

  Int prev_volume = int_pow(seq.r, seq.d);
  const ConvexLatticePolytope* prev = nullptr;
  std::set<LatticeVector> kept;
  Int claimed_total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // Each stage rebuilds from the retained vertex sets, with the anchor of
    // every carved simplex (its first listed vertex) leaving the pool when
    // the deletion has positive volume.
    if (seq.deltas[k].vertices.empty()) return false;
    if (seq.deltas[k].claimed_volume > 0) kept.erase(seq.deltas[k].vertices.front());
    for (const auto& v : seq.X[k]) kept.insert(v);
    std::vector<LatticeVector> pts = seq.Y;
    pts.insert(pts.end(), kept.begin(), kept.end());
    auto rebuilt = convex_hull(pts, seq.d);
    if (!(rebuilt == seq.P[k])) return false;
    // Stages nest and stay in the family.
    if (!in_family(seq.P[k], seq.d, seq.r)) return false;
    if (prev) {
      for (const auto& v : seq.P[k].vertices)
        if (!prev->contains(v)) return false;
    }
    // Each deletion loses exactly the claimed volume.
    if (prev_volume - seq.P[k].normalized_volume != seq.deltas[k].claimed_volume) return false;
    claimed_total += seq.deltas[k].claimed_volume;
    prev_volume = seq.P[k].normalized_volume;
    prev = &seq.P[k];
  }
  return int_pow(seq.r, seq.d) - seq.P.back().normalized_volume == claimed_total;
}

}  // namespace latticeforge
