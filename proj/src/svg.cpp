#include "qg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "qg/common.hpp"
#include "qg/csv.hpp"

namespace qg {

namespace {

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#17becf"};

double transform(double v, bool log_scale) { return log_scale ? std::log10(v) : v; }

} // namespace

void write_svg_plot(const std::string& path, const std::vector<SvgSeries>& series,
                    const SvgOptions& options) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot open svg file: " + path);

  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  bool any = false;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (options.log_x && x <= 0.0) continue;
      if (options.log_y && y <= 0.0) continue;
      const double tx = transform(x, options.log_x);
      const double ty = transform(y, options.log_y);
      if (!any) {
        min_x = max_x = tx;
        min_y = max_y = ty;
        any = true;
      } else {
        min_x = std::min(min_x, tx);
        max_x = std::max(max_x, tx);
        min_y = std::min(min_y, ty);
        max_y = std::max(max_y, ty);
      }
    }
  }
  if (!any) {
    min_x = min_y = 0.0;
    max_x = max_y = 1.0;
  }
  if (max_x - min_x < 1e-12) max_x = min_x + 1.0;
  if (max_y - min_y < 1e-12) max_y = min_y + 1.0;

  const double margin_left = 70.0, margin_right = 20.0, margin_top = 40.0, margin_bottom = 55.0;
  const double plot_w = options.width - margin_left - margin_right;
  const double plot_h = options.height - margin_top - margin_bottom;
  auto px = [&](double x) {
    return margin_left + plot_w * (transform(x, options.log_x) - min_x) / (max_x - min_x);
  };
  auto py = [&](double y) {
    return margin_top + plot_h * (1.0 - (transform(y, options.log_y) - min_y) / (max_y - min_y));
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << options.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << options.title << "</text>\n";

  // axes
  out << "<rect x=\"" << margin_left << "\" y=\"" << margin_top << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";

  // ticks: 5 per axis on the transformed scale
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = min_x + (max_x - min_x) * t / 4.0;
    const double fy = min_y + (max_y - min_y) * t / 4.0;
    const double vx = options.log_x ? std::pow(10.0, fx) : fx;
    const double vy = options.log_y ? std::pow(10.0, fy) : fy;
    const double sx = margin_left + plot_w * t / 4.0;
    const double sy = margin_top + plot_h * (1.0 - t / 4.0);
    char label[48];
    std::snprintf(label, sizeof(label), "%.4g", vx);
    out << "<text x=\"" << sx << "\" y=\"" << margin_top + plot_h + 18
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
    std::snprintf(label, sizeof(label), "%.4g", vy);
    out << "<text x=\"" << margin_left - 8 << "\" y=\"" << sy + 4
        << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  out << "</g>\n";

  out << "<text x=\"" << margin_left + plot_w / 2 << "\" y=\"" << options.height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << options.x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << margin_top + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 16 " << margin_top + plot_h / 2 << ")\">" << options.y_label
      << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kSeriesColors[s % (sizeof(kSeriesColors) / sizeof(kSeriesColors[0]))];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
    for (const auto& [x, y] : series[s].points) {
      if (options.log_x && x <= 0.0) continue;
      if (options.log_y && y <= 0.0) continue;
      out << px(x) << ',' << py(y) << ' ';
    }
    out << "\"/>\n";
    for (const auto& [x, y] : series[s].points) {
      if (options.log_x && x <= 0.0) continue;
      if (options.log_y && y <= 0.0) continue;
      out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2.4\" fill=\"" << color
          << "\"/>\n";
    }
    out << "<text x=\"" << margin_left + 10 << "\" y=\"" << margin_top + 16 + 15 * s
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
        << series[s].name << "</text>\n";
  }
  out << "</svg>\n";
}

} // namespace qg
