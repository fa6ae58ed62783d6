#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <string>

#include "latticeforge/errors.hpp"

namespace latticeforge {

// Exact arbitrary-precision integer/rational scalars used by all geometric
// predicates. Floats appear only in clearly labeled fit/report fields.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 50-digit decimal for region-volume reports (>= 20 correct digits required).
using Dec = boost::multiprecision::cpp_dec_float_50;

inline Int int_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Largest y >= 0 with y*y <= n. Errors on negative input.
inline Int isqrt(const Int& n) {
  require_domain(n >= 0, "isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Floor of a rational.
inline Int floor_rat(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline std::int64_t to_int64(const Int& v, const char* what = "value") {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw DomainError(std::string(what) + " does not fit in 64 bits: " + v.str());
  return static_cast<std::int64_t>(v);
}

inline Dec to_dec(const Int& v) { return Dec(v.str()); }

inline Dec to_dec(const Rational& q) {
  return to_dec(Int(boost::multiprecision::numerator(q))) /
         to_dec(Int(boost::multiprecision::denominator(q)));
}

inline double to_double(const Dec& v) { return v.convert_to<double>(); }

// pi to 50 decimal digits; enough head-room for 20-digit-certified reports.
inline const Dec& dec_pi() {
  static const Dec pi("3.14159265358979323846264338327950288419716939937511");
  return pi;
}

// Volume of the unit ball in dimension d (supported: 2, 3, 4).
inline Dec unit_ball_volume(int d) {
  switch (d) {
    case 2: return dec_pi();
    case 3: return dec_pi() * 4 / 3;
    case 4: return dec_pi() * dec_pi() / 2;
    default: throw DomainError("unit_ball_volume: unsupported dimension " + std::to_string(d));
  }
}

// Parses "17", "35/2" or "4.5" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace latticeforge
