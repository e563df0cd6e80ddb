#ifndef QG_SVG_HPP
#define QG_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace qg {

struct SvgSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct SvgOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  int width = 820;
  int height = 580;
};

// Minimal standalone line plot; enough for the growth-curve figures.
void write_svg_plot(const std::string& path, const std::vector<SvgSeries>& series,
                    const SvgOptions& options);

} // namespace qg

#endif
