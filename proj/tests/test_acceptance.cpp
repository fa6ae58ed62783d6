#include "latticeforge/acceptance.hpp"

#include <iostream>
#include <vector>

#include "doctest.h"

using namespace latticeforge;

// The full release gate: nine checks, one printed line each, every one
// asserted to pass. Budget a few minutes of wall time.
TEST_CASE("release gate passes every check") {
  const std::vector<CriterionResult> results = run_acceptance([](const CriterionResult& res) {
    std::cout << gate_line(res) << std::endl;
  });
  REQUIRE(results.size() == 9);
  for (const CriterionResult& res : results) {
    INFO(res.label, ": ", res.detail);
    CHECK(res.pass);
  }
  CHECK(all_passed(results));
}
