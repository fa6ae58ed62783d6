#include "latticeforge/hull.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latticeforge/errors.hpp"

namespace latticeforge {

namespace {

// ---------------------------------------------------------------------------
// Scalar kits. The generic kit uses cpp_int throughout; the fast kit stores
// coordinates in int64 and accumulates predicates in __int128, and is only
// selected when conservative bounds rule out overflow (d <= 3 with |coord| <=
// 2^19, d = 4 with |coord| <= 2^15, d <= 1 likewise trivial).
// ---------------------------------------------------------------------------

using I128 = __int128;

Int int_from_i128(I128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  Int hi = static_cast<std::uint64_t>(u >> 64);
  Int out = (hi << 64) | static_cast<std::uint64_t>(u);
  return neg ? Int(-out) : out;
}

I128 gcd_i128(I128 a, I128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct GenericKit {
  using Coord = Int;
  using Acc = Int;
  static Int to_int(const Acc& v) { return v; }
  static Acc from_int(const Int& v) { return v; }
  static Acc gcd(const Acc& a, const Acc& b) { return boost::multiprecision::gcd(a, b); }
};

struct FastKit {
  using Coord = std::int64_t;
  using Acc = I128;
  static Int to_int(const Acc& v) { return int_from_i128(v); }
  static Acc from_int(const Int& v) { return static_cast<I128>(to_int64(v, "coordinate")); }
  static Acc gcd(const Acc& a, const Acc& b) { return gcd_i128(a, b); }
};

// Determinant by fraction-free elimination; valid over any integral domain.
template <class A>
A det_acc(std::vector<std::vector<A>> m) {
  const std::size_t n = m.size();
  if (n == 0) return A(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  A prev(1);
  bool neg = false;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t pivot = r;
    while (pivot < n && m[pivot][r] == A(0)) ++pivot;
    if (pivot == n) return A(0);
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      neg = !neg;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = r + 1; j < n; ++j) m[i][j] = (m[r][r] * m[i][j] - m[i][r] * m[r][j]) / prev;
      m[i][r] = A(0);
    }
    prev = m[r][r];
  }
  return neg ? A(-prev) : prev;
}

// Vector orthogonal to d-1 difference rows (cofactor expansion).
template <class A>
std::vector<A> ortho_acc(const std::vector<std::vector<A>>& rows, std::size_t d) {
  std::vector<A> n(d);
  if (d == 1) {
    n[0] = A(1);
    return n;
  }
  std::vector<std::vector<A>> minor(d - 1, std::vector<A>(d - 1));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r + 1 < d; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c == j) continue;
        minor[r][cc++] = rows[r][c];
      }
    }
    A m = det_acc(minor);
    n[j] = (j % 2 == 0) ? m : A(-m);
  }
  return n;
}

// Raised when the input's affine hull has dimension < d; carries the indices
// of an anchor point and independent direction-defining points.
struct DegenerateInput {
  int rank = 0;
  std::size_t anchor = 0;
  std::vector<std::size_t> independent;  // points whose differences span the hull
};

template <class Kit>
class QuickHull {
 public:
  using C = typename Kit::Coord;
  using A = typename Kit::Acc;

  struct FacetRec {
    std::vector<int> v;        // d point ids; v[k]'s opposite ridge is v minus v[k]
    std::vector<int> neigh;    // neighbor facet across that ridge
    std::vector<A> normal;     // outward
    A offset{};                // normal . x <= offset inside
    std::vector<int> outside;  // conflict points (strictly outside)
    bool dead = false;
  };

  int d;
  std::vector<std::vector<C>> pts;
  std::vector<FacetRec> facets;
  std::vector<A> witness;  // sum of initial simplex vertices = interior * (d+1)

  explicit QuickHull(int dim) : d(dim) {}

  A eval(const FacetRec& f, int p) const {
    A s{};
    for (int i = 0; i < d; ++i) s += f.normal[i] * A(pts[p][i]);
    return s - f.offset;
  }

  bool strictly_outside(const FacetRec& f, int p) const { return eval(f, p) > A(0); }

  // Builds an outward-oriented facet through the d points `ids`.
  FacetRec make_facet(const std::vector<int>& ids) {
    FacetRec f;
    f.v = ids;
    std::vector<std::vector<A>> rows;
    rows.reserve(d - 1);
    for (int i = 1; i < d; ++i) {
      std::vector<A> r(d);
      for (int j = 0; j < d; ++j) r[j] = A(pts[ids[i]][j]) - A(pts[ids[0]][j]);
      rows.push_back(std::move(r));
    }
    f.normal = ortho_acc(rows, static_cast<std::size_t>(d));
    A off{};
    for (int j = 0; j < d; ++j) off += f.normal[j] * A(pts[ids[0]][j]);
    f.offset = off;
    // Orient so the interior witness is strictly inside.
    A wval{};
    for (int j = 0; j < d; ++j) wval += f.normal[j] * witness[j];
    A rhs = f.offset * A(d + 1);
    require_invariant(wval != rhs, "hull facet through interior witness");
    if (wval > rhs) {
      for (A& c : f.normal) c = -c;
      f.offset = -f.offset;
    }
    f.neigh.assign(d, -1);
    return f;
  }

  void run() {
    const std::size_t n = pts.size();
    // Affine-rank scan for the initial simplex.
    std::vector<std::size_t> indep;
    std::vector<std::vector<A>> reduced;  // fraction-free reduced direction rows
    std::vector<int> pivot_col;
    A prev_pivot(1);
    for (std::size_t i = 1; i < n && indep.size() < static_cast<std::size_t>(d); ++i) {
      std::vector<A> row(d);
      for (int j = 0; j < d; ++j) row[j] = A(pts[i][j]) - A(pts[0][j]);
      // Reduce against accepted rows.
      for (std::size_t k = 0; k < reduced.size(); ++k) {
        int pc = pivot_col[k];
        if (row[pc] == A(0)) continue;
        A a = reduced[k][pc], b = row[pc];
        for (int j = 0; j < d; ++j) row[j] = row[j] * a - reduced[k][j] * b;
      }
      int pc = -1;
      for (int j = 0; j < d; ++j)
        if (row[j] != A(0)) {
          pc = j;
          break;
        }
      if (pc < 0) continue;
      // Keep reduced rows primitive-ish to limit growth.
      A g{};
      for (const A& c : row) g = Kit::gcd(g, c);
      if (g > A(1))
        for (A& c : row) c /= g;
      reduced.push_back(std::move(row));
      pivot_col.push_back(pc);
      indep.push_back(i);
    }
    (void)prev_pivot;
    if (indep.size() < static_cast<std::size_t>(d)) {
      DegenerateInput deg;
      deg.rank = static_cast<int>(indep.size());
      deg.anchor = 0;
      deg.independent = indep;
      throw deg;
    }

    std::vector<int> simplex;
    simplex.push_back(0);
    for (std::size_t i : indep) simplex.push_back(static_cast<int>(i));

    witness.assign(d, A{});
    for (int id : simplex)
      for (int j = 0; j < d; ++j) witness[j] += A(pts[id][j]);

    // d+1 facets; facet k omits simplex[k].
    for (int k = 0; k <= d; ++k) {
      std::vector<int> ids;
      for (int i = 0; i <= d; ++i)
        if (i != k) ids.push_back(simplex[i]);
      facets.push_back(make_facet(ids));
    }
    // Neighbors: facets k and l share the ridge omitting both simplex[k] and
    // simplex[l]. In facet k, the slot opposite vertex simplex[l] points to l.
    for (int k = 0; k <= d; ++k)
      for (int l = 0; l <= d; ++l) {
        if (k == l) continue;
        FacetRec& f = facets[k];
        for (int s = 0; s < d; ++s)
          if (f.v[s] == simplex[l]) f.neigh[s] = l;
      }

    // Seed conflict lists.
    std::vector<bool> in_simplex(n, false);
    for (int id : simplex) in_simplex[id] = true;
    std::vector<int> work;
    for (std::size_t p = 0; p < n; ++p) {
      if (in_simplex[p]) continue;
      for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        if (strictly_outside(facets[fi], static_cast<int>(p))) {
          facets[fi].outside.push_back(static_cast<int>(p));
          break;
        }
      }
    }
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
      if (!facets[fi].outside.empty()) work.push_back(static_cast<int>(fi));

    std::vector<int> visible, horizon_f, horizon_slot, newly;
    std::vector<char> visited;
    while (!work.empty()) {
      int fi = work.back();
      work.pop_back();
      FacetRec& f = facets[fi];
      if (f.dead || f.outside.empty()) continue;
      // Farthest conflict point.
      int best = f.outside[0];
      A bestval = eval(f, best);
      for (std::size_t i = 1; i < f.outside.size(); ++i) {
        A v = eval(f, f.outside[i]);
        if (v > bestval || (v == bestval && f.outside[i] < best)) {
          bestval = v;
          best = f.outside[i];
        }
      }
      const int p = best;

      // Visible set via BFS over the neighbor graph.
      visible.clear();
      horizon_f.clear();
      horizon_slot.clear();
      visited.assign(facets.size(), 0);
      std::vector<int> stack{fi};
      visited[fi] = 1;
      while (!stack.empty()) {
        int gi = stack.back();
        stack.pop_back();
        visible.push_back(gi);
        for (int s = 0; s < d; ++s) {
          int ni = facets[gi].neigh[s];
          require_invariant(ni >= 0, "hull facet with missing neighbor");
          if (visited[ni]) continue;
          if (strictly_outside(facets[ni], p)) {
            visited[ni] = 1;
            stack.push_back(ni);
          } else {
            // Horizon ridge: facets[gi].v minus slot-s vertex, seen from gi.
            horizon_f.push_back(gi);
            horizon_slot.push_back(s);
            // Mark the directed ridge (gi, s); ni itself may be reached again
            // through other ridges, which is fine.
          }
        }
      }

      // Build the replacement cone.
      newly.clear();
      std::map<std::vector<int>, std::pair<int, int>> subridge;  // sorted d-2 ids -> (facet, slot)
      for (std::size_t h = 0; h < horizon_f.size(); ++h) {
        const int gi = horizon_f[h];
        const int slot = horizon_slot[h];
        const int outside_neighbor = facets[gi].neigh[slot];
        std::vector<int> ridge;
        ridge.reserve(d - 1);
        for (int s = 0; s < d; ++s)
          if (s != slot) ridge.push_back(facets[gi].v[s]);
        std::vector<int> ids = ridge;
        ids.push_back(p);
        int nf = static_cast<int>(facets.size());
        facets.push_back(make_facet(ids));
        FacetRec& f2 = facets.back();
        // Slot of the ridge (opposite p = last slot).
        f2.neigh[d - 1] = outside_neighbor;
        // Rewire the untouched neighbor to point at the new facet.
        FacetRec& g = facets[outside_neighbor];
        for (int s = 0; s < d; ++s)
          if (g.neigh[s] == gi) g.neigh[s] = nf;
        // Link new facets to each other across sub-ridges containing p.
        for (int drop = 0; drop + 1 < d; ++drop) {
          std::vector<int> key;
          key.reserve(d - 2);
          for (int s = 0; s + 1 < d; ++s)
            if (s != drop) key.push_back(f2.v[s]);
          std::sort(key.begin(), key.end());
          auto it = subridge.find(key);
          if (it == subridge.end()) {
            subridge.emplace(std::move(key), std::make_pair(nf, drop));
          } else {
            facets[nf].neigh[drop] = it->second.first;
            facets[it->second.first].neigh[it->second.second] = nf;
          }
        }
        newly.push_back(nf);
      }
      require_invariant(!newly.empty(), "hull insertion produced no facets");

      // Redistribute conflicts of dead facets.
      for (int gi : visible) facets[gi].dead = true;
      for (int gi : visible) {
        for (int q : facets[gi].outside) {
          if (q == p) continue;
          for (int nf : newly) {
            if (strictly_outside(facets[nf], q)) {
              facets[nf].outside.push_back(q);
              break;
            }
          }
        }
        facets[gi].outside.clear();
        facets[gi].outside.shrink_to_fit();
      }
      for (int nf : newly)
        if (!facets[nf].outside.empty()) work.push_back(nf);
    }
  }
};

struct ExtractedHull {
  std::vector<int> vertex_ids;
  std::vector<std::pair<LatticeVector, Int>> facets;  // primitive (normal, offset)
  std::vector<std::vector<int>> simplices;
  Int volume = 0;
};

template <class Kit>
ExtractedHull extract(QuickHull<Kit>& qh) {
  using A = typename Kit::Acc;
  const int d = qh.d;
  ExtractedHull out;

  std::vector<int> living;
  for (std::size_t i = 0; i < qh.facets.size(); ++i)
    if (!qh.facets[i].dead) living.push_back(static_cast<int>(i));

  // Volume: cone from a hull vertex over the boundary triangulation. Facets
  // whose hyperplane passes through the apex contribute zero automatically.
  const int apex = qh.facets[living.front()].v[0];
  A vol{};
  std::vector<std::vector<A>> rows(d, std::vector<A>(d));
  for (int fi : living) {
    const auto& f = qh.facets[fi];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) rows[i][j] = A(qh.pts[f.v[i]][j]) - A(qh.pts[apex][j]);
    A dv = det_acc(rows);
    vol += dv < A(0) ? A(-dv) : dv;
  }
  out.volume = Kit::to_int(vol);

  // Canonical primitive facets, deduplicated.
  std::map<std::pair<std::vector<Int>, Int>, std::vector<int>> groups;
  for (int fi : living) {
    const auto& f = qh.facets[fi];
    A g{};
    for (const A& c : f.normal) g = Kit::gcd(g, c);
    g = Kit::gcd(g, f.offset);
    std::vector<Int> n(d);
    for (int j = 0; j < d; ++j) n[j] = Kit::to_int(g > A(1) ? A(f.normal[j] / g) : f.normal[j]);
    Int off = Kit::to_int(g > A(1) ? A(f.offset / g) : f.offset);
    groups[{std::move(n), std::move(off)}].push_back(fi);
  }
  out.facets.reserve(groups.size());
  for (const auto& [key, members] : groups) {
    (void)members;
    out.facets.emplace_back(LatticeVector(key.first), key.second);
  }

  // Candidate points: all ids appearing in living facets.
  std::vector<int> cand;
  for (int fi : living)
    for (int id : qh.facets[fi].v) cand.push_back(id);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  // True vertices: candidates incident to >= d facets whose normals have
  // full rank (equivalently, whose minimal face is 0-dimensional).
  for (int id : cand) {
    std::vector<LatticeVector> incident;
    for (const auto& [nrm, off] : out.facets) {
      A lhs{};
      for (int j = 0; j < d; ++j) lhs += Kit::from_int(nrm[j]) * A(qh.pts[id][j]);
      if (lhs == Kit::from_int(off)) incident.push_back(nrm);
    }
    if (static_cast<int>(incident.size()) < d) continue;
    IntMatrix m;
    m.reserve(incident.size());
    for (const auto& v : incident) m.push_back(v.x);
    if (matrix_rank(std::move(m)) == d) out.vertex_ids.push_back(id);
  }

  out.simplices.reserve(living.size());
  for (int fi : living) out.simplices.push_back(qh.facets[fi].v);
  return out;
}

template <class Kit>
ConvexLatticePolytope hull_full(const std::vector<LatticeVector>& unique_pts, int d,
                                HullTriangulation* tri_out) {
  QuickHull<Kit> qh(d);
  qh.pts.reserve(unique_pts.size());
  for (const auto& p : unique_pts) {
    std::vector<typename Kit::Coord> row(d);
    for (int j = 0; j < d; ++j) {
      if constexpr (std::is_same_v<Kit, FastKit>)
        row[j] = to_int64(p[j], "coordinate");
      else
        row[j] = p[j];
    }
    qh.pts.push_back(std::move(row));
  }
  qh.run();
  ExtractedHull ex = extract(qh);

  ConvexLatticePolytope poly;
  poly.d = d;
  poly.dim = d;
  poly.normalized_volume = ex.volume;
  poly.vertices.reserve(ex.vertex_ids.size());
  for (int id : ex.vertex_ids) poly.vertices.push_back(unique_pts[id]);
  std::sort(poly.vertices.begin(), poly.vertices.end());
  poly.facets.reserve(ex.facets.size());
  for (auto& [n, off] : ex.facets) poly.facets.push_back(Facet{std::move(n), std::move(off)});
  std::sort(poly.facets.begin(), poly.facets.end(), [](const Facet& a, const Facet& b) {
    return a.normal == b.normal ? a.offset < b.offset : a.normal < b.normal;
  });
  if (tri_out) {
    tri_out->points = unique_pts;
    tri_out->simplices = std::move(ex.simplices);
  }
  return poly;
}

ConvexLatticePolytope hull_degenerate(const std::vector<LatticeVector>& unique_pts, int d,
                                      const DegenerateInput& deg) {
  ConvexLatticePolytope poly;
  poly.d = d;
  poly.dim = deg.rank;
  poly.normalized_volume = 0;
  const LatticeVector& anchor = unique_pts[deg.anchor];
  if (deg.rank == 0) {
    poly.vertices = {anchor};
    return poly;
  }
  std::vector<LatticeVector> basis;
  basis.reserve(deg.independent.size());
  for (std::size_t i : deg.independent) basis.push_back(unique_pts[i] - anchor);
  poly.affine_basis = basis;

  // Project every point to exact integer coordinates in the flat: solve the
  // rational coordinates, then scale by a common denominator (affine bijection
  // on the flat, so extreme points correspond 1:1).
  std::vector<std::vector<Rational>> coords;
  coords.reserve(unique_pts.size());
  Int den = 1;
  for (const auto& p : unique_pts) {
    auto c = solve_rational(basis, p - anchor);
    require_invariant(c.has_value(), "degenerate hull: point outside detected affine hull");
    for (const Rational& q : *c)
      den = boost::multiprecision::lcm(den, Int(boost::multiprecision::denominator(q)));
    coords.push_back(std::move(*c));
  }
  std::vector<LatticeVector> proj;
  proj.reserve(coords.size());
  for (const auto& c : coords) {
    LatticeVector w(deg.rank);
    for (int j = 0; j < deg.rank; ++j) {
      Rational scaled = c[j] * den;
      w[j] = Int(boost::multiprecision::numerator(scaled));
    }
    proj.push_back(std::move(w));
  }
  ConvexLatticePolytope sub = convex_hull(proj, deg.rank);
  require_invariant(sub.full_dimensional(), "projected degenerate hull is not full-dimensional");

  std::map<std::vector<Int>, std::size_t> index;
  for (std::size_t i = 0; i < proj.size(); ++i) index.emplace(proj[i].x, i);
  for (const auto& v : sub.vertices) {
    auto it = index.find(v.x);
    require_invariant(it != index.end(), "projected vertex lost its preimage");
    poly.vertices.push_back(unique_pts[it->second]);
  }
  std::sort(poly.vertices.begin(), poly.vertices.end());
  return poly;
}

}  // namespace

ConvexLatticePolytope convex_hull(const std::vector<LatticeVector>& points, int d,
                                  HullTriangulation* triangulation_out) {
  require_domain(d >= 1, "convex_hull: dimension must be >= 1");
  require_domain(!points.empty(), "convex_hull: empty point set");
  for (const auto& p : points)
    require_domain(static_cast<int>(p.size()) == d, "convex_hull: point dimension mismatch");

  std::vector<LatticeVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Int maxc = 0;
  for (const auto& p : pts)
    for (const Int& c : p.x) maxc = std::max(maxc, Int(boost::multiprecision::abs(c)));

  const bool fast = (d <= 3 && maxc <= Int(1) << 19) || (d == 4 && maxc <= Int(1) << 15);
  try {
    if (fast) return hull_full<FastKit>(pts, d, triangulation_out);
    return hull_full<GenericKit>(pts, d, triangulation_out);
  } catch (const DegenerateInput& deg) {
    if (triangulation_out) {
      triangulation_out->points.clear();
      triangulation_out->simplices.clear();
    }
    return hull_degenerate(pts, d, deg);
  }
}

Int cone_volume(const HullTriangulation& tri, const LatticeVector& apex, int d) {
  Int vol = 0;
  IntMatrix rows(d, std::vector<Int>(d));
  for (const auto& s : tri.simplices) {
    require_domain(static_cast<int>(s.size()) == d, "cone_volume: simplex arity mismatch");
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) rows[i][j] = tri.points[s[i]][j] - apex[j];
    vol += boost::multiprecision::abs(determinant(rows));
  }
  return vol;
}

Int normalized_volume(const ConvexLatticePolytope& poly) {
  return poly.normalized_volume;
}

}  // namespace latticeforge
