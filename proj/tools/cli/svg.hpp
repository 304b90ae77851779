#pragma once

#include <string>
#include <vector>

namespace secretary::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  std::vector<Series> series;
};

/// Standalone SVG: frame, ticks, axis labels, one polyline per series and a
/// legend. Output is deterministic for a given chart.
std::string render_svg(const LineChart& chart);

std::string xml_escape(const std::string& text);

}  // namespace secretary::cli
