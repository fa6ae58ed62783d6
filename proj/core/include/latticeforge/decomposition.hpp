#pragma once

#include <string>
#include <vector>

#include "latticeforge/numeric.hpp"

namespace latticeforge {

// Value of the i-th derivative of g(x) = (2x)^d at x, for 0 <= i <= d:
//   g^(i)(x) = 2^d * d!/(d-i)! * x^(d-i).
Int g_derivative(int d, int i, const Int& x);

struct GreedyStep {
  int i = 0;      // which derivative was consumed
  Int x;          // chosen argument: largest x >= 0 with g^(i)(x) <= before
  Int used;       // g^(i)(x)
  Int before;     // budget entering this step
};

// Greedy expansion of m against g(x) = (2x)^d and its derivatives:
//   m = g(x_0) + g'(x_1) + ... + g^(d-1)(x_{d-1}) + remainder,
// each x_i maximal, giving x_0 >= x_1 >= ... >= x_{d-1} >= 0 and
// 0 <= remainder < 2^d * d!.
struct GreedyDecomposition {
  int d = 0;
  Int m;
  std::vector<Int> xs;
  Int remainder;
  std::vector<GreedyStep> trace;
};

GreedyDecomposition decompose(int d, const Int& m);

// Polynomial with rational coefficients, stored low degree first
// (coeffs[j] multiplies x^j). Admissible means: positive leading
// coefficient and no negative coefficient anywhere, which makes every
// derivative nonnegative and nondecreasing on x >= 0.
struct AdmissiblePolynomial {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  AdmissiblePolynomial derivative(int order = 1) const;
  Rational eval(const Int& x) const;
  std::string str() const;

  // Comma-separated coefficients, highest degree first: "8,0,0,0" is 8x^3.
  static AdmissiblePolynomial parse(const std::string& text);
  // g(x) = (2x)^d as an explicit coefficient vector.
  static AdmissiblePolynomial power_form(int d);
};

// Throws a domain error when the polynomial is not admissible.
void check_admissible(const AdmissiblePolynomial& g);

struct GeneralStep {
  int i = 0;
  Int x;
  Rational used;
  Rational before;
};

// Same greedy scheme against an arbitrary admissible polynomial of degree k:
//   m = g(x_0) + g'(x_1) + ... + g^(k-1)(x_{k-1}) + remainder,
// with x_0 >= ... >= x_{k-1} >= 0 and 0 <= remainder < k! * leading(g).
// Steps must stay integer-valued; a derivative whose value at the chosen
// argument is fractional is reported as a domain error, as is a budget m_i
// below the derivative's constant term g^(i)(0).
struct GeneralDecomposition {
  AdmissiblePolynomial g;
  Int m;
  std::vector<Int> xs;
  Rational remainder;
  std::vector<GeneralStep> trace;
};

GeneralDecomposition decompose_general(const AdmissiblePolynomial& g, const Int& m);

}  // namespace latticeforge
