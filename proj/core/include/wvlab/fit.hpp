#pragma once

#include <vector>

namespace wvlab {

/// Least-squares line through (log x, log y).
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals;  // log y - fitted, per point
};

/// Throws std::invalid_argument for fewer than two points, mismatched
/// lengths, non-positive data or identical abscissae.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace wvlab
