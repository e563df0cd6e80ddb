#ifndef QG_FIT_HPP
#define QG_FIT_HPP

#include <string>
#include <utility>
#include <vector>

namespace qg {

// Least-squares fit of y = c * N^a (power) or y = c * (log2 N)^a (polylog) on
// log-transformed data.
struct FitResult {
  enum class Model { power, polylog };
  Model model = Model::power;
  double exponent = 0.0;
  double constant = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> data; // (N, y) rows used
};

FitResult fit_power_law(const std::vector<std::pair<double, double>>& data);
FitResult fit_polylog_law(const std::vector<std::pair<double, double>>& data);

std::string fit_model_name(FitResult::Model model);

} // namespace qg

#endif
