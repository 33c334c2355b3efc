#include "wvlab/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace wvlab {

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_loglog: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("fit_loglog: insufficient points");
  const auto n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("fit_loglog: data must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_loglog: abscissae are identical");
  LogLogFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) f.residuals.push_back(ly[i] - (f.intercept + f.slope * lx[i]));
  return f;
}

}  // namespace wvlab
