#include <random>
#include <vector>

#include "doctest.h"
#include "latticeforge/decomposition.hpp"
#include "latticeforge/errors.hpp"

using namespace latticeforge;

namespace {

// Linear-scan oracle for the greedy expansion: walk x upward instead of
// binary searching.
GreedyDecomposition scan_decompose(int d, const Int& m) {
  GreedyDecomposition out;
  out.d = d;
  out.m = m;
  Int budget = m;
  for (int i = 0; i < d; ++i) {
    Int x = 0;
    while (g_derivative(d, i, x + 1) <= budget) ++x;
    out.xs.push_back(x);
    budget -= g_derivative(d, i, x);
  }
  out.remainder = budget;
  return out;
}

void check_invariants(const GreedyDecomposition& g) {
  REQUIRE(g.xs.size() == static_cast<std::size_t>(g.d));
  Int total = g.remainder;
  for (int i = 0; i < g.d; ++i) {
    // Maximality of each step.
    CHECK(g_derivative(g.d, i, g.xs[i]) <= g.trace[i].before);
    CHECK(g_derivative(g.d, i, g.xs[i] + 1) > g.trace[i].before);
    total += g_derivative(g.d, i, g.xs[i]);
  }
  CHECK(total == g.m);
  CHECK(g.remainder >= 0);
  CHECK(g.remainder < g_derivative(g.d, g.d, 0));
  for (int i = 0; i + 1 < g.d; ++i) CHECK(g.xs[i] >= g.xs[i + 1]);
}

}  // namespace

TEST_CASE("derivative values of the even power form") {
  // g(x) = (2x)^3: g(2) = 64, g'(x) = 24x^2 so g'(1) = 24, g''(x) = 48x.
  CHECK(g_derivative(3, 0, 2) == 64);
  CHECK(g_derivative(3, 1, 1) == 24);
  CHECK(g_derivative(3, 2, 1) == 48);
  CHECK(g_derivative(3, 3, 0) == 48);   // constant third derivative
  CHECK(g_derivative(3, 3, 17) == 48);
  CHECK(g_derivative(2, 0, 5) == 100);  // (2x)^2 at 5
  CHECK(g_derivative(2, 1, 3) == 24);   // 8x at 3
  CHECK(g_derivative(2, 2, 9) == 8);
  CHECK(g_derivative(4, 0, 2) == 256);
  CHECK(g_derivative(1, 1, 0) == 2);
  CHECK_THROWS_AS(g_derivative(0, 0, 1), DomainError);
  CHECK_THROWS_AS(g_derivative(3, 4, 1), DomainError);
  CHECK_THROWS_AS(g_derivative(3, 1, -1), DomainError);
}

TEST_CASE("greedy expansions of pinned budgets") {
  auto a = decompose(2, 30);  // 30 = 4*2^2 + 8*1 + 6
  CHECK(a.xs == std::vector<Int>{2, 1});
  CHECK(a.remainder == 6);

  auto b = decompose(3, 500);  // 500 = 8*27 + 24*9 + 48*1 + 20
  CHECK(b.xs == std::vector<Int>{3, 3, 1});
  CHECK(b.remainder == 20);

  auto c = decompose(2, 0);
  CHECK(c.xs == std::vector<Int>{0, 0});
  CHECK(c.remainder == 0);

  auto e = decompose(3, 61);  // 61 = 8*1 + 24*1 + 48*0 + 29
  CHECK(e.xs == std::vector<Int>{1, 1, 0});
  CHECK(e.remainder == 29);

  CHECK_THROWS_AS(decompose(0, 5), DomainError);
  CHECK_THROWS_AS(decompose(2, -1), DomainError);
}

TEST_CASE("trace records each step's budget and consumption") {
  auto g = decompose(3, 500);
  REQUIRE(g.trace.size() == 3);
  CHECK(g.trace[0].before == 500);
  CHECK(g.trace[0].used == 216);
  CHECK(g.trace[1].before == 284);
  CHECK(g.trace[1].used == 216);
  CHECK(g.trace[2].before == 68);
  CHECK(g.trace[2].used == 48);
  CHECK(g.trace[2].before - g.trace[2].used == g.remainder);
}

TEST_CASE("greedy invariants hold over an exhaustive budget range") {
  for (int d : {2, 3}) {
    for (long m = 0; m <= 100000; ++m) {
      auto g = decompose(d, m);
      check_invariants(g);
      if (m % 97 == 0 || m <= 2000) {
        auto oracle = scan_decompose(d, m);
        REQUIRE(g.xs == oracle.xs);
        REQUIRE(g.remainder == oracle.remainder);
      }
    }
  }
}

TEST_CASE("greedy invariants hold for large random budgets") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 2 + static_cast<int>(rng() % 3);
    Int m = Int(rng() % 1000000000) * Int(rng() % 1000000) + Int(rng() % 1000);
    check_invariants(decompose(d, m));
  }
  // r = 4096 in the plane: the whole missed volume of the empty family member.
  check_invariants(decompose(2, int_pow(4096, 2)));
  check_invariants(decompose(4, int_pow(255, 4)));
}

TEST_CASE("polynomial parsing, evaluation, and derivatives") {
  auto g = AdmissiblePolynomial::parse("8,0,0,0");
  CHECK(g.degree() == 3);
  CHECK(g.eval(2) == 64);
  CHECK(g.str() == "8*x^3");
  auto g1 = g.derivative();
  CHECK(g1.degree() == 2);
  CHECK(g1.eval(3) == 216);  // 24 x^2
  CHECK(g.derivative(3).eval(5) == 48);

  auto h = AdmissiblePolynomial::parse("1,1/2,0");
  CHECK(h.eval(4) == 18);  // x^2 + x/2
  CHECK(h.derivative().eval(4) == Rational(17) / 2);

  CHECK(AdmissiblePolynomial::power_form(3).coeffs ==
        std::vector<Rational>{0, 0, 0, 8});
  CHECK(AdmissiblePolynomial::parse("0,0,5").degree() == 0);
  CHECK_THROWS_AS(AdmissiblePolynomial::parse(""), DomainError);
  CHECK_THROWS_AS(AdmissiblePolynomial::parse("2,x"), DomainError);
}

TEST_CASE("admissibility requires nonnegative coefficients and positive lead") {
  CHECK_NOTHROW(check_admissible(AdmissiblePolynomial::parse("1,0,0")));
  CHECK_NOTHROW(check_admissible(AdmissiblePolynomial::parse("3/2,1,4")));
  // x^2 - x is integer valued and increasing on x >= 1 but its first
  // derivative is negative near 0, so it is rejected symbolically.
  CHECK_THROWS_AS(check_admissible(AdmissiblePolynomial::parse("1,-1,0")), DomainError);
  CHECK_THROWS_AS(check_admissible(AdmissiblePolynomial::parse("-1,0")), DomainError);
  CHECK_THROWS_AS(check_admissible(AdmissiblePolynomial::parse("5")), DomainError);
}

TEST_CASE("general expansion matches the power form specialization") {
  for (int d : {1, 2, 3, 4}) {
    auto g = AdmissiblePolynomial::power_form(d);
    for (long m : {0L, 1L, 7L, 63L, 64L, 500L, 9999L, 123456L}) {
      auto general = decompose_general(g, m);
      auto fast = decompose(d, m);
      CHECK(general.xs == fast.xs);
      CHECK(general.remainder == Rational(fast.remainder));
    }
  }
}

TEST_CASE("general expansion on a non-power admissible polynomial") {
  // g(x) = x^3 + 2x: derivatives 3x^2 + 2 and 6x.
  auto g = AdmissiblePolynomial::parse("1,0,2,0");
  auto r = decompose_general(g, 100);
  // x_0 = 4 (72 <= 100 < 135); budget 28; g'(x) = 3x^2+2: x_1 = 2 (14 <= 28 < 29);
  // budget 14; g''(x) = 6x: x_2 = 2 (12 <= 14 < 18); remainder 2 < 3! * 1 = 6.
  CHECK(r.xs == std::vector<Int>{4, 2, 2});
  CHECK(r.remainder == 2);
  REQUIRE(r.trace.size() == 3);
  CHECK(r.trace[1].before == 28);
  CHECK(r.trace[1].used == 14);
}

TEST_CASE("general expansion reports structured domain failures") {
  // Constant term above the budget: g(x) = x^2 + 5 needs at least 5.
  auto g = AdmissiblePolynomial::parse("1,0,5");
  try {
    decompose_general(g, 3);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    std::string msg = e.what();
    CHECK(msg.find("constant term") != std::string::npos);
    CHECK(msg.find("5") != std::string::npos);
  }

  // Fractional step: g(x) = x^2/2 picks x = 3 on budget 5, value 9/2.
  auto h = AdmissiblePolynomial::parse("1/2,0,0");
  try {
    decompose_general(h, 5);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    std::string msg = e.what();
    CHECK(msg.find("fractional") != std::string::npos);
    CHECK(msg.find("9/2") != std::string::npos);
  }

  CHECK_THROWS_AS(decompose_general(AdmissiblePolynomial::parse("1,-1,0"), 10), DomainError);
  CHECK_THROWS_AS(decompose_general(AdmissiblePolynomial::parse("1,0,0"), -1), DomainError);
}

TEST_CASE("general expansion with fractional coefficients stays integral when possible") {
  // g(x) = x^2/2 on even squares: budget 8 picks x = 4 exactly (g = 8),
  // leaving 0 for the linear derivative x.
  auto h = AdmissiblePolynomial::parse("1/2,0,0");
  auto r = decompose_general(h, 8);
  CHECK(r.xs == std::vector<Int>{4, 0});
  CHECK(r.remainder == 0);
}

TEST_CASE("mixed budgets against the general remainder bound") {
  // 2x^3 + x^2: the second derivative 12x + 2 has a positive constant term,
  // so a residual budget of 0 or 1 at that step is a legitimate structured
  // failure; every other budget must decompose cleanly.
  auto g = AdmissiblePolynomial::parse("2,1,0,0");
  long ok = 0, rejected = 0;
  for (long m = 0; m <= 3000; ++m) {
    try {
      auto r = decompose_general(g, m);
      Rational total = r.remainder;
      for (std::size_t i = 0; i < r.trace.size(); ++i) total += r.trace[i].used;
      CHECK(total == Rational(m));
      CHECK(r.remainder < Rational(12));  // 3! * 2
      for (std::size_t i = 0; i + 1 < r.xs.size(); ++i) CHECK(r.xs[i] >= r.xs[i + 1]);
      ++ok;
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("constant term") != std::string::npos);
      ++rejected;
    }
  }
  CHECK(ok + rejected == 3001);
  CHECK(ok > 2000);
  CHECK(rejected > 0);
}
