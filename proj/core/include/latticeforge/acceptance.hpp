#pragma once

#include <functional>
#include <string>
#include <vector>

namespace latticeforge {

// Outcome of one check of the release gate. detail is a one-line summary of
// the measured quantities (exact counts, fitted exponents, witness ranges);
// on an exception pass is false and detail carries the message.
struct CriterionResult {
  int index = 0;
  std::string label;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

using AcceptanceProgress = std::function<void(const CriterionResult&)>;

// Runs the nine release-gate checks in order, invoking on_done (when set)
// after each one finishes. Every check is deterministic: randomized sweeps
// use fixed seeds recorded in their detail line. Expect a few minutes of
// wall time; nothing here needs more than the default point budget.
std::vector<CriterionResult> run_acceptance(const AcceptanceProgress& on_done = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

// Formats one result as the canonical gate line, e.g.
//   [3/9] PASS sampled-volume-family-4d  500 random m: exact (12.1s)
std::string gate_line(const CriterionResult& result, std::size_t total = 9);

}  // namespace latticeforge
