#include "qg/fit.hpp"

#include <cmath>

#include "qg/common.hpp"

namespace qg {

namespace {

FitResult fit_transformed(const std::vector<std::pair<double, double>>& data,
                          FitResult::Model model) {
  require(data.size() >= 2, "fit: need at least two data points");

  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [n, y] : data) {
    require(y > 0.0, "fit: y values must be positive");
    double x;
    if (model == FitResult::Model::power) {
      require(n > 0.0, "fit: N must be positive for a power law");
      x = std::log(n);
    } else {
      require(n > 1.0, "fit: N must exceed 1 for a polylog law");
      x = std::log(std::log2(n));
    }
    xs.push_back(x);
    ys.push_back(std::log(y));
  }

  const double count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  require(sxx > 0.0, "fit: degenerate abscissae");

  FitResult result;
  result.model = model;
  result.exponent = sxy / sxx;
  result.constant = std::exp(mean_y - result.exponent * mean_x);
  if (syy > 0.0) {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double fitted = mean_y + result.exponent * (xs[i] - mean_x);
      ss_res += (ys[i] - fitted) * (ys[i] - fitted);
    }
    result.r_squared = 1.0 - ss_res / syy;
  } else {
    result.r_squared = 1.0; // constant data fitted exactly
  }
  result.data = data;
  return result;
}

} // namespace

FitResult fit_power_law(const std::vector<std::pair<double, double>>& data) {
  return fit_transformed(data, FitResult::Model::power);
}

FitResult fit_polylog_law(const std::vector<std::pair<double, double>>& data) {
  return fit_transformed(data, FitResult::Model::polylog);
}

std::string fit_model_name(FitResult::Model model) {
  return model == FitResult::Model::power ? "power" : "polylog";
}

} // namespace qg
