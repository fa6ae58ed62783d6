#include "latticeforge/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "latticeforge/arnold.hpp"
#include "latticeforge/construction.hpp"
#include "latticeforge/decomposition.hpp"
#include "latticeforge/gaps.hpp"
#include "latticeforge/integer_hull.hpp"
#include "latticeforge/numeric.hpp"

namespace latticeforge {
namespace {

std::string fixed3(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << v;
  return out.str();
}

// 1. Greedy decomposition sweep: for d in {2, 3} and every m up to 10^5 the
// split must reproduce m exactly, keep the arguments sorted, and leave a
// remainder within [0, 2^d d!].
CriterionResult check_decomposition_sweep() {
  CriterionResult res;
  const Int limit = 100000;
  for (int d = 2; d <= 3; ++d) {
    const Int bound = int_pow(2, d) * factorial(d);
    for (Int m = 0; m <= limit; ++m) {
      const GreedyDecomposition dec = decompose(d, m);
      Int total = dec.remainder;
      Int prev = -1;
      for (int i = 0; i < d; ++i) {
        total += g_derivative(d, i, dec.xs[i]);
        const bool ordered = (i == 0) ? dec.xs[i] >= 0 : dec.xs[i] <= prev && dec.xs[i] >= 0;
        if (!ordered) {
          res.detail = "argument order broken at d=" + std::to_string(d) + " m=" + m.str();
          return res;
        }
        prev = dec.xs[i];
      }
      if (total != m || dec.remainder < 0 || dec.remainder > bound) {
        res.detail = "identity broken at d=" + std::to_string(d) + " m=" + m.str();
        return res;
      }
    }
  }
  res.pass = true;
  res.detail = "d=2,3, every m <= 100000: sum identity exact, remainders in range";
  return res;
}

// 2. Exhaustive volume family at d=3, r=60: every missed volume in
// [0, 1728] is realized by a verified member of exact volume 216000 - m.
CriterionResult check_volume_family_exhaustive() {
  CriterionResult res;
  const Int r = 60;
  const Int full = int_pow(r, 3);
  for (Int m = 0; m <= 1728; ++m) {
    const Construction c = construct_missed(3, r, m);
    if (c.P.normalized_volume != full - m) {
      res.detail = "volume mismatch at m=" + m.str();
      return res;
    }
  }
  res.pass = true;
  res.detail = "d=3 r=60: all 1729 missed volumes hit v = 216000 - m exactly";
  return res;
}

// 3. Sampled volume family at d=4, r=400: 500 pseudo-random missed volumes
// from a fixed seed, each realized exactly.
CriterionResult check_volume_family_sampled() {
  CriterionResult res;
  const Int r = 400;
  const Int full = int_pow(r, 4);
  std::mt19937_64 rng(20260814u);
  std::uniform_int_distribution<std::uint64_t> dist(0, 65536);
  for (int k = 0; k < 500; ++k) {
    const Int m = dist(rng);
    const Construction c = construct_missed(4, r, m);
    if (c.P.normalized_volume != full - m) {
      res.detail = "volume mismatch at m=" + m.str();
      return res;
    }
  }
  res.pass = true;
  res.detail = "d=4 r=400: 500 random m in [0, 65536] (seed 20260814), all exact";
  return res;
}

// 4. Planar value set: for r in {2..6} the exhaustively enumerated volume
// set of the sandwiched family is exactly {0} together with {r, ..., r^2}.
CriterionResult check_planar_value_set() {
  CriterionResult res;
  for (Int r = 2; r <= 6; ++r) {
    const ValueSetReport rep = value_set_exhaustive(2, r);
    std::vector<Int> expected{0};
    for (Int v = r; v <= r * r; ++v) expected.push_back(v);
    if (rep.achieved != expected) {
      res.detail = "value set differs from {0} u {r..r^2} at r=" + r.str();
      return res;
    }
  }
  res.pass = true;
  res.detail = "r=2..6: achieved volumes equal {0} u {r..r^2} exactly";
  return res;
}

// 5. Volume gap certificates at d=3, r in {6, 7}: the three intervals above
// r^2 are empty and [r^2+2r, r^2+2r+4] is fully achieved with witnesses.
CriterionResult check_gap_certificates() {
  CriterionResult res;
  for (Int r = 6; r <= 7; ++r) {
    const GapTheoremCertificate cert = verify_gap_theorems(r);
    int empty = 0;
    int achieved = 0;
    for (const IntervalCertificate& iv : cert.intervals) {
      if (iv.status == "empty") ++empty;
      if (iv.status == "achieved" && iv.lo == r * r + 2 * r && iv.hi == iv.lo + 4 &&
          iv.values.size() == 5) {
        ++achieved;
      }
    }
    if (!cert.ok || empty != 3 || achieved != 1) {
      res.detail = "certificate failed at r=" + r.str();
      return res;
    }
  }
  res.pass = true;
  res.detail = "r=6,7: three empty intervals, [r^2+2r, r^2+2r+4] achieved with witnesses";
  return res;
}

// 6. Planar hull scaling over r = 64..4096 (geometric): fitted closeness
// exponent near -1/3, fitted vertex-count exponent near 2/3, and the
// midpoint-free certificate at every hull vertex (enforced inside the
// closeness scan).
CriterionResult check_hull_scaling() {
  CriterionResult res;
  std::vector<Rational> radii;
  for (Int r = 64; r <= 4096; r *= 2) radii.push_back(Rational(r));
  const ScalingFit closeness = closeness_scan(2, radii);
  const ScalingFit vertices = vertex_count_scan(RegionShape::ball, 2, radii);
  const double ce = closeness.exponent;
  const double ve = vertices.exponent;
  res.pass = std::abs(ce + 1.0 / 3.0) <= 0.15 && std::abs(ve - 2.0 / 3.0) <= 0.15;
  res.detail = "closeness exponent " + fixed3(ce) + " (target -1/3 +/- 0.15), f0 exponent " +
               fixed3(ve) + " (target 2/3 +/- 0.15), all vertices midpoint-free";
  return res;
}

// 7. Trimmed-family census at the first workable planar radius >= 100:
// every subset trim lands on the shared volume exactly (enforced per trim),
// unmarked canonical classes have size <= 2 and count at least half the
// family, and the marked variant separates everything.
CriterionResult check_family_census() {
  CriterionResult res;
  const Int r = first_feasible_radius(2, 100, 200);
  const FamilySpec spec = base_family(2, r);
  const std::uint64_t budget = std::uint64_t{1} << 20;
  const CensusReport plain = census(spec, budget, false);
  const CensusReport marked = census(spec, budget, true);
  const std::uint64_t family = std::uint64_t{1} << spec.X.size();
  const bool plain_ok = plain.generated == family && plain.max_class <= 2 &&
                        2 * plain.distinct >= plain.generated;
  const bool marked_ok = marked.generated == family && marked.distinct == marked.generated;
  res.pass = plain_ok && marked_ok;
  res.detail = "r=" + r.str() + " |X|=" + std::to_string(spec.X.size()) + ": " +
               std::to_string(plain.generated) + " trims exact, " +
               std::to_string(plain.distinct) + " classes (max size " +
               std::to_string(plain.max_class) + "); marked census all distinct";
  return res;
}

// 8. Paraboloid lift: for d=2, r <= 50 and d=3, r <= 8 every admissible
// base point lifts to a vertex of the region's integer hull.
CriterionResult check_paraboloid_lift() {
  CriterionResult res;
  Int checked = 0;
  for (int d = 2; d <= 3; ++d) {
    const Int top = d == 2 ? 50 : 8;
    for (Int r = 1; r <= top; ++r) {
      const ParaboloidCheck pc = paraboloid_vertex_check(d, Rational(r));
      if (!pc.ok) {
        res.detail = "lifted point missing at d=" + std::to_string(d) + " r=" + r.str();
        return res;
      }
      checked += pc.expected;
    }
  }
  res.pass = true;
  res.detail = "d=2 r<=50 and d=3 r<=8: all " + checked.str() + " lifted points are vertices";
  return res;
}

// 9. Class-growth report: the asymptotic lower bound on log(class count) is
// out of reach at desk scale, so this check only reports the finite rows
// (|X|, member volume, implied exponent) per radius. It passes when the
// rows are produced with positive exponents; nothing asymptotic is asserted.
CriterionResult check_growth_report() {
  CriterionResult res;
  struct Probe {
    int d;
    Int r;
  };
  const std::vector<Probe> probes{{2, 48}, {2, 100}, {2, 120}, {3, 300}};
  std::ostringstream out;
  bool ok = true;
  for (const Probe& p : probes) {
    const FamilySpec spec = base_family(p.d, p.r);
    const CensusReport rep = census(spec, std::uint64_t{1} << 20, false, 4, 1);
    ok = ok && rep.implied_exponent > 0;
    if (out.tellp() > 0) out << "; ";
    out << "d=" << p.d << " r=" << p.r << ": |X|=" << rep.x_size << " V=" << rep.v_target
        << " exponent " << fixed3(rep.implied_exponent);
  }
  res.pass = ok;
  res.detail = "reported, not asserted: " + out.str();
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceProgress& on_done) {
  struct Entry {
    const char* label;
    CriterionResult (*check)();
  };
  const Entry entries[] = {
      {"decomposition-sweep", check_decomposition_sweep},
      {"volume-family-exhaustive-3d", check_volume_family_exhaustive},
      {"volume-family-sampled-4d", check_volume_family_sampled},
      {"planar-value-set", check_planar_value_set},
      {"volume-gap-certificates", check_gap_certificates},
      {"planar-hull-scaling", check_hull_scaling},
      {"trim-family-census", check_family_census},
      {"paraboloid-lift-vertices", check_paraboloid_lift},
      {"class-growth-report", check_growth_report},
  };
  std::vector<CriterionResult> results;
  int index = 1;
  for (const Entry& entry : entries) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = entry.check();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.index = index++;
    res.label = entry.label;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(res);
    if (on_done) on_done(results.back());
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    if (!r.pass) return false;
  }
  return results.size() == 9;
}

std::string gate_line(const CriterionResult& result, std::size_t total) {
  std::ostringstream out;
  out << "[" << result.index << "/" << total << "] " << (result.pass ? "PASS" : "FAIL") << " "
      << result.label << "  " << result.detail << " (" << fixed3(result.seconds) << "s)";
  return out.str();
}

}  // namespace latticeforge
