#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "latticeforge/numeric.hpp"

namespace latticeforge {

// A lattice point/vector: d exact integer coordinates, d >= 1.
struct LatticeVector {
  std::vector<Int> x;

  LatticeVector() = default;
  explicit LatticeVector(std::size_t d) : x(d) {}
  LatticeVector(std::initializer_list<Int> init) : x(init) {}
  explicit LatticeVector(std::vector<Int> coords) : x(std::move(coords)) {}

  std::size_t size() const { return x.size(); }
  Int& operator[](std::size_t i) { return x[i]; }
  const Int& operator[](std::size_t i) const { return x[i]; }

  auto begin() { return x.begin(); }
  auto end() { return x.end(); }
  auto begin() const { return x.begin(); }
  auto end() const { return x.end(); }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.x == b.x; }
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] < b[i]) return std::strong_ordering::less;
      if (b[i] < a[i]) return std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
  }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend LatticeVector operator*(const Int& s, const LatticeVector& a) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) s += ",";
      s += x[i].str();
    }
    return s + ")";
  }
};

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int squared_norm(const LatticeVector& a) { return dot(a, a); }

inline Int coordinate_sum(const LatticeVector& a) {
  Int s = 0;
  for (const Int& c : a.x) s += c;
  return s;
}

inline bool all_nonnegative(const LatticeVector& a) {
  for (const Int& c : a.x)
    if (c < 0) return false;
  return true;
}

inline bool all_positive(const LatticeVector& a) {
  for (const Int& c : a.x)
    if (c <= 0) return false;
  return true;
}

// i-th standard basis vector scaled by s, in dimension d.
inline LatticeVector axis_point(std::size_t d, std::size_t i, const Int& s) {
  LatticeVector v(d);
  v[i] = s;
  return v;
}

}  // namespace latticeforge
