#include "latticeforge/decomposition.hpp"

#include <functional>
#include <sstream>

#include "latticeforge/errors.hpp"

namespace latticeforge {

namespace {

// Largest x >= 0 with value(x) <= cap, for value nondecreasing on x >= 0.
// Precondition: value(0) <= cap.
Int max_argument(const std::function<Rational(const Int&)>& value, const Rational& cap) {
  Int lo = 0;
  Int hi = 1;
  while (value(hi) <= cap) {
    lo = hi;
    hi *= 2;
  }
  // value(lo) <= cap < value(hi)
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (value(mid) <= cap) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

Int g_derivative(int d, int i, const Int& x) {
  require_domain(d >= 1, "derivative needs degree d >= 1");
  require_domain(i >= 0 && i <= d, "derivative order must lie in [0, d]");
  require_domain(x >= 0, "derivative argument must be nonnegative");
  Int coeff = int_pow(2, d) * factorial(d) / factorial(d - i);
  return coeff * int_pow(x, d - i);
}

GreedyDecomposition decompose(int d, const Int& m) {
  require_domain(d >= 1, "decomposition needs dimension d >= 1");
  require_domain(m >= 0, "decomposition needs a nonnegative budget");
  GreedyDecomposition out;
  out.d = d;
  out.m = m;
  Int budget = m;
  for (int i = 0; i < d; ++i) {
    Int x = max_argument([&](const Int& t) { return Rational(g_derivative(d, i, t)); },
                         Rational(budget));
    Int used = g_derivative(d, i, x);
    out.trace.push_back({i, x, used, budget});
    out.xs.push_back(x);
    budget -= used;
    require_invariant(budget >= 0, "greedy step overshot its budget");
  }
  out.remainder = budget;
  require_invariant(out.remainder < g_derivative(d, d, 0),
                    "remainder must stay below the top derivative");
  for (int i = 0; i + 1 < d; ++i) {
    require_invariant(out.xs[i] >= out.xs[i + 1], "greedy arguments must be nonincreasing");
  }
  return out;
}

AdmissiblePolynomial AdmissiblePolynomial::derivative(int order) const {
  require_domain(order >= 0, "derivative order must be nonnegative");
  AdmissiblePolynomial out = *this;
  for (int k = 0; k < order; ++k) {
    if (out.coeffs.size() <= 1) {
      out.coeffs.assign(1, Rational(0));
      continue;
    }
    std::vector<Rational> next(out.coeffs.size() - 1);
    for (std::size_t j = 1; j < out.coeffs.size(); ++j) {
      next[j - 1] = out.coeffs[j] * Rational(Int(j));
    }
    out.coeffs = std::move(next);
  }
  return out;
}

Rational AdmissiblePolynomial::eval(const Int& x) const {
  Rational acc = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    acc = acc * Rational(x) + coeffs[j];
  }
  return acc;
}

std::string AdmissiblePolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    if (coeffs[j] == 0 && coeffs.size() > 1) continue;
    if (!first) os << " + ";
    os << coeffs[j];
    if (j >= 1) os << "*x";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AdmissiblePolynomial AdmissiblePolynomial::parse(const std::string& text) {
  AdmissiblePolynomial out;
  std::string item;
  std::istringstream is(text);
  std::vector<Rational> high_first;
  while (std::getline(is, item, ',')) {
    high_first.push_back(parse_rational(item));
  }
  require_domain(!high_first.empty(), "polynomial needs at least one coefficient");
  out.coeffs.assign(high_first.rbegin(), high_first.rend());
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

AdmissiblePolynomial AdmissiblePolynomial::power_form(int d) {
  require_domain(d >= 1, "power form needs degree d >= 1");
  AdmissiblePolynomial out;
  out.coeffs.assign(d + 1, Rational(0));
  out.coeffs[d] = Rational(int_pow(2, d));
  return out;
}

void check_admissible(const AdmissiblePolynomial& g) {
  require_domain(g.degree() >= 1, "admissible polynomial needs degree at least 1");
  require_domain(g.coeffs.back() > 0, "admissible polynomial needs a positive leading coefficient");
  for (const Rational& c : g.coeffs) {
    require_domain(c >= 0,
                   "admissible polynomial must have nonnegative coefficients (every derivative "
                   "must be nondecreasing on x >= 0)");
  }
}

GeneralDecomposition decompose_general(const AdmissiblePolynomial& g, const Int& m) {
  check_admissible(g);
  require_domain(m >= 0, "decomposition needs a nonnegative budget");
  const int k = g.degree();
  GeneralDecomposition out;
  out.g = g;
  out.m = m;
  Rational budget(m);
  for (int i = 0; i < k; ++i) {
    AdmissiblePolynomial gi = g.derivative(i);
    if (budget < gi.coeffs[0]) {
      throw DomainError("step " + std::to_string(i) + " of the expansion has budget " +
                        budget.str() + " below the derivative's constant term " +
                        gi.coeffs[0].str());
    }
    Int x = max_argument([&](const Int& t) { return gi.eval(t); }, budget);
    Rational used = gi.eval(x);
    if (denominator(used) != 1) {
      throw DomainError("step " + std::to_string(i) + " of the expansion is fractional: " +
                        used.str() + " at x = " + x.str());
    }
    out.trace.push_back({i, x, used, budget});
    out.xs.push_back(x);
    budget -= used;
    require_invariant(budget >= 0, "greedy step overshot its budget");
  }
  out.remainder = budget;
  require_invariant(out.remainder < Rational(factorial(k)) * g.coeffs.back(),
                    "remainder must stay below k! times the leading coefficient");
  for (int i = 0; i + 1 < k; ++i) {
    require_invariant(out.xs[i] >= out.xs[i + 1], "greedy arguments must be nonincreasing");
  }
  return out;
}

}  // namespace latticeforge
