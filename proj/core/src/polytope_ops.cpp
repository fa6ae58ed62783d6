#include "latticeforge/polytope_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "latticeforge/errors.hpp"

namespace latticeforge {

ConvexLatticePolytope corner_simplex(int d, const Int& r) {
  require_domain(d >= 1 && r > 0, "corner_simplex: need d >= 1 and r > 0");
  std::vector<LatticeVector> pts;
  pts.push_back(LatticeVector(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i) pts.push_back(axis_point(d, i, r));
  return convex_hull(pts, d);
}

ConvexLatticePolytope diagonal_simplex(int d, const Int& r) {
  require_domain(d >= 2 && r > 0, "diagonal_simplex: need d >= 2 and r > 0");
  std::vector<LatticeVector> pts;
  for (int i = 0; i < d; ++i) pts.push_back(axis_point(d, i, r));
  return convex_hull(pts, d);
}

bool in_family(const ConvexLatticePolytope& P, int d, const Int& r) {
  if (P.empty() || P.d != d) return false;
  for (int i = 0; i < d; ++i)
    if (!P.contains(axis_point(d, i, r))) return false;
  for (const auto& v : P.vertices)
    if (!all_nonnegative(v) || coordinate_sum(v) > r) return false;
  return true;
}

Int missed_volume(const ConvexLatticePolytope& P, int d, const Int& r) {
  require_domain(in_family(P, d, r), "missed_volume: polytope is not in the sandwich family");
  return int_pow(r, static_cast<unsigned>(d)) - P.normalized_volume;
}

ConvexLatticePolytope apply_unimodular(const ConvexLatticePolytope& P, const IntMatrix& U,
                                       const LatticeVector& t) {
  require_domain(!P.empty(), "apply_unimodular: empty polytope");
  const int d = P.d;
  require_domain(static_cast<int>(U.size()) == d && static_cast<int>(U[0].size()) == d &&
                     static_cast<int>(t.size()) == d,
                 "apply_unimodular: dimension mismatch");
  Int det = determinant(U);
  require_domain(det == 1 || det == -1, "apply_unimodular: |det U| must be 1, got " + det.str());
  std::vector<LatticeVector> mapped;
  mapped.reserve(P.vertices.size());
  for (const auto& v : P.vertices) {
    LatticeVector w(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      Int s = t[i];
      for (int j = 0; j < d; ++j) s += U[i][j] * v[j];
      w[i] = s;
    }
    mapped.push_back(std::move(w));
  }
  return convex_hull(mapped, d);
}

std::vector<LatticeVector> canonical_form(const ConvexLatticePolytope& P) {
  require_domain(!P.empty(), "canonical_form: empty polytope");
  const int d = P.d;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<LatticeVector> best;
  do {
    std::vector<LatticeVector> image;
    image.reserve(P.vertices.size());
    for (const auto& v : P.vertices) {
      LatticeVector w(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) w[i] = v[perm[i]];
      image.push_back(std::move(w));
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::pair<LatticeVector, LatticeVector>> faces_1(const ConvexLatticePolytope& P) {
  require_domain(P.full_dimensional(), "faces_1: polytope must be full-dimensional");
  require_domain(P.d <= 4, "faces_1: unsupported dimension " + std::to_string(P.d));
  const int d = P.d;
  if (d == 1) return {{P.vertices.front(), P.vertices.back()}};

  // Tight facet index list per vertex.
  const std::size_t nv = P.vertices.size();
  std::vector<std::vector<int>> tight(nv);
  for (std::size_t vi = 0; vi < nv; ++vi)
    for (std::size_t fi = 0; fi < P.facets.size(); ++fi)
      if (dot(P.facets[fi].normal, P.vertices[vi]) == P.facets[fi].offset)
        tight[vi].push_back(static_cast<int>(fi));

  // Candidate pairs: vertices sharing a facet. Two vertices form an edge iff
  // their shared facets' normals span a (d-1)-dimensional space (the edge's
  // normal cone has dimension exactly d-1).
  std::vector<std::vector<int>> facet_vertices(P.facets.size());
  for (std::size_t vi = 0; vi < nv; ++vi)
    for (int fi : tight[vi]) facet_vertices[fi].push_back(static_cast<int>(vi));

  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<LatticeVector, LatticeVector>> edges;
  std::vector<int> common;
  for (const auto& fv : facet_vertices) {
    for (std::size_t a = 0; a < fv.size(); ++a)
      for (std::size_t b = a + 1; b < fv.size(); ++b) {
        auto key = std::minmax(fv[a], fv[b]);
        if (!seen.insert(key).second) continue;
        common.clear();
        std::set_intersection(tight[key.first].begin(), tight[key.first].end(),
                              tight[key.second].begin(), tight[key.second].end(),
                              std::back_inserter(common));
        if (static_cast<int>(common.size()) < d - 1) continue;
        IntMatrix normals;
        normals.reserve(common.size());
        for (int fi : common) normals.push_back(P.facets[fi].normal.x);
        if (matrix_rank(std::move(normals)) == d - 1)
          edges.emplace_back(P.vertices[key.first], P.vertices[key.second]);
      }
  }
  for (auto& e : edges)
    if (e.second < e.first) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace latticeforge
