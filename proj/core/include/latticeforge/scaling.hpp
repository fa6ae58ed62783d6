#pragma once

#include <vector>

#include "latticeforge/numeric.hpp"

namespace latticeforge {

// One measurement row of a power-law scan.
struct FitRow {
  Rational r;
  Dec quantity;
};

// Ordinary least squares on (log r, log quantity). Rows whose quantity is
// zero carry no information about the exponent (they satisfy any upper
// bound) and are excluded from the regression; at least 5 positive rows are
// required. ratio fields track quantity / r^target over the used rows, the
// constant band of the claimed two-sided bound.
struct ScalingFit {
  std::vector<FitRow> rows;
  std::size_t used = 0;
  double exponent = 0;
  double intercept = 0;
  double target = 0;
  double rms_residual = 0;
  double min_ratio = 0;
  double max_ratio = 0;
};

ScalingFit fit_power_law(const std::vector<FitRow>& rows, double target);

}  // namespace latticeforge
