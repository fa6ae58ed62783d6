#include "latticeforge/scaling.hpp"

#include <cmath>
#include <cstddef>

#include "latticeforge/errors.hpp"

namespace latticeforge {

ScalingFit fit_power_law(const std::vector<FitRow>& rows, double target) {
  ScalingFit fit;
  fit.rows = rows;
  fit.target = target;

  std::vector<double> lx, ly;
  for (const FitRow& row : rows) {
    require_domain(row.r > 0, "fit_power_law: radii must be positive");
    require_domain(row.quantity >= 0, "fit_power_law: quantities must be non-negative");
    if (row.quantity > 0) {
      lx.push_back(std::log(to_double(to_dec(row.r))));
      ly.push_back(std::log(to_double(row.quantity)));
    }
  }
  fit.used = lx.size();
  require_domain(fit.used >= 5, "fit_power_law: needs at least 5 rows with positive quantity, got " +
                                    std::to_string(fit.used));

  const std::size_t n = lx.size();
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  require_domain(sxx > 0, "fit_power_law: radii must not all coincide");
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;

  double ss = 0;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = ly[i] - (fit.intercept + fit.exponent * lx[i]);
    ss += resid * resid;
    const double ratio = std::exp(ly[i] - target * lx[i]);
    if (first || ratio < fit.min_ratio) fit.min_ratio = ratio;
    if (first || ratio > fit.max_ratio) fit.max_ratio = ratio;
    first = false;
  }
  fit.rms_residual = std::sqrt(ss / static_cast<double>(n));
  return fit;
}

}  // namespace latticeforge
