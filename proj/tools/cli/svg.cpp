#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace secretary::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 200.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr int kTicks = 5;

constexpr std::array<const char*, 10> kPalette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render_svg(const LineChart& chart) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double xspan = chart.x_max > chart.x_min ? chart.x_max - chart.x_min : 1.0;
  const double yspan = chart.y_max > chart.y_min ? chart.y_max - chart.y_min : 1.0;
  auto px = [&](double x) { return kLeft + (x - chart.x_min) / xspan * plot_w; };
  auto py = [&](double y) {
    const double c = std::clamp(y, chart.y_min, chart.y_min + yspan);
    return kTop + plot_h - (c - chart.y_min) / yspan * plot_h;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth)
      << "\" height=\"" << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << ' '
      << num(kHeight) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text class=\"title\" x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kTop - 15)
      << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(chart.title) << "</text>\n";

  out << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
  out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w)
      << "\" height=\"" << num(plot_h) << "\"/>\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = chart.x_min + xspan * i / kTicks;
    const double fy = chart.y_min + yspan * i / kTicks;
    out << "<line x1=\"" << num(px(fx)) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
        << num(px(fx)) << "\" y2=\"" << num(kTop + plot_h + 5) << "\"/>\n";
    out << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(fy)) << "\" x2=\""
        << num(kLeft) << "\" y2=\"" << num(py(fy)) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"ticks\" font-size=\"11\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = chart.x_min + xspan * i / kTicks;
    const double fy = chart.y_min + yspan * i / kTicks;
    out << "<text x=\"" << num(px(fx)) << "\" y=\"" << num(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\">" << tick(fx) << "</text>\n";
    out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(fy) + 4)
        << "\" text-anchor=\"end\">" << tick(fy) << "</text>\n";
  }
  out << "</g>\n";

  out << "<text class=\"xlabel\" x=\"" << num(kLeft + plot_w / 2) << "\" y=\""
      << num(kHeight - 12) << "\" text-anchor=\"middle\" font-size=\"12\">"
      << xml_escape(chart.x_label) << "</text>\n";
  out << "<text class=\"ylabel\" x=\"15\" y=\"" << num(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 15 "
      << num(kTop + plot_h / 2) << ")\">" << xml_escape(chart.y_label) << "</text>\n";

  out << "<g class=\"series\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    const Series& series = chart.series[s];
    out << "<polyline stroke=\"" << kPalette[s % kPalette.size()] << "\" points=\"";
    const std::size_t count = std::min(series.x.size(), series.y.size());
    for (std::size_t i = 0; i < count; ++i) {
      if (i) out << ' ';
      out << num(px(series.x[i])) << ',' << num(py(series.y[i]));
    }
    out << "\"><title>" << xml_escape(series.label) << "</title></polyline>\n";
  }
  out << "</g>\n";

  out << "<g class=\"legend\" font-size=\"11\">\n";
  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    const double y = kTop + 10 + 16.0 * static_cast<double>(s);
    const double x = kLeft + plot_w + 12;
    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x + 18)
        << "\" y2=\"" << num(y) << "\" stroke=\"" << kPalette[s % kPalette.size()]
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(x + 24) << "\" y=\"" << num(y + 4) << "\">"
        << xml_escape(chart.series[s].label) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace secretary::cli
