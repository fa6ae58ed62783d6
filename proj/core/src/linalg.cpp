#include "latticeforge/linalg.hpp"

#include <algorithm>
#include <utility>

#include "latticeforge/errors.hpp"

namespace latticeforge {

namespace {

// Fraction-free Gaussian elimination (Bareiss). Returns the determinant for
// square inputs; for rank, runs on any shape and reports the pivot count.
struct Elimination {
  Int det = 1;
  int rank = 0;
  bool negated = false;
};

Elimination eliminate(IntMatrix& m) {
  Elimination out;
  if (m.empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      out.negated = !out.negated;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  out.rank = static_cast<int>(r);
  out.det = prev;
  return out;
}

}  // namespace

Int determinant(IntMatrix m) {
  require_domain(!m.empty() && m.size() == m[0].size(), "determinant: matrix must be square");
  const std::size_t n = m.size();
  Elimination e = eliminate(m);
  if (e.rank < static_cast<int>(n)) return 0;
  return e.negated ? Int(-e.det) : e.det;
}

int matrix_rank(IntMatrix m) {
  if (m.empty()) return 0;
  return eliminate(m).rank;
}

LatticeVector orthogonal_vector(const std::vector<LatticeVector>& rows) {
  require_domain(!rows.empty(), "orthogonal_vector: need d-1 rows");
  const std::size_t d = rows[0].size();
  require_domain(rows.size() + 1 == d, "orthogonal_vector: need exactly d-1 rows in dimension d");
  LatticeVector n(d);
  IntMatrix minor(d - 1, std::vector<Int>(d - 1));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r < d - 1; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c == j) continue;
        minor[r][cc++] = rows[r][c];
      }
    }
    Int mdet = determinant(minor);
    n[j] = (j % 2 == 0) ? mdet : Int(-mdet);
  }
  return n;
}

std::optional<std::vector<Rational>> solve_rational(const std::vector<LatticeVector>& basis,
                                                    const LatticeVector& target) {
  const std::size_t k = basis.size();
  if (k == 0) {
    for (const Int& t : target.x)
      if (t != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  const std::size_t d = basis[0].size();
  // Pick k independent rows of the d x k column matrix, solve by Cramer, then
  // confirm the remaining rows are consistent.
  IntMatrix cols(d, std::vector<Int>(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d; ++i) cols[i][j] = basis[j][i];

  std::vector<std::size_t> picked;
  IntMatrix probe;
  for (std::size_t i = 0; i < d && picked.size() < k; ++i) {
    probe.push_back(cols[i]);
    if (matrix_rank(probe) == static_cast<int>(probe.size()))
      picked.push_back(i);
    else
      probe.pop_back();
  }
  require_domain(picked.size() == k, "solve_rational: basis vectors are dependent");

  IntMatrix M(k, std::vector<Int>(k));
  std::vector<Int> rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    M[r] = cols[picked[r]];
    rhs[r] = target[picked[r]];
  }
  Int det0 = determinant(M);
  std::vector<Rational> c(k);
  for (std::size_t j = 0; j < k; ++j) {
    IntMatrix Mj = M;
    for (std::size_t r = 0; r < k; ++r) Mj[r][j] = rhs[r];
    // Divide instead of the (num, den) constructor: the latter requires a
    // canonical (coprime, positive-denominator) pair.
    c[j] = Rational(determinant(Mj)) / Rational(det0);
  }
  // Consistency on all d rows.
  for (std::size_t i = 0; i < d; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc += Rational(cols[i][j]) * c[j];
    if (acc != Rational(target[i])) return std::nullopt;
  }
  return c;
}

void make_primitive(LatticeVector& v, Int* content) {
  Int g = 0;
  for (const Int& c : v.x) g = boost::multiprecision::gcd(g, c);
  if (content) *content = g;
  if (g > 1)
    for (Int& c : v.x) c /= g;
}

}  // namespace latticeforge
