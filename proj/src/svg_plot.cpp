#include "avogrip/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "avogrip/errors.hpp"
#include "avogrip/io.hpp"

namespace avogrip {

namespace {

/*
 * Plot area sits inside fixed margins. SVG y grows downward, so data y is
 * flipped against the plot bottom.
 *
 *   +----------------------------+
 *   |  title              legend |
 *   |   +------------------+     |
 *   |   |  plot            |     |
 *   |   +------------------+     |
 *   |        x label             |
 *   +----------------------------+
 */
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 50;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

// Step of 1, 2 or 5 times a power of ten giving roughly `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0})
    if (raw <= m * mag) return m * mag;
  return 10.0 * mag;
}

std::string fmt(double v) { return format_sig6(std::abs(v) < 1e-12 ? 0.0 : v); }

}  // namespace

std::string render_svg(const LineChart& chart, int width, int height) {
  if (chart.x.size() < 2) throw DomainError("x", "need at least two points to plot");
  for (const auto& s : chart.series)
    if (s.y.size() != chart.x.size()) throw DomainError("series", "'" + s.name + "' length mismatch");

  const auto [xmin_it, xmax_it] = std::minmax_element(chart.x.begin(), chart.x.end());
  double xmin = *xmin_it, xmax = *xmax_it;
  double ymin = 0.0, ymax = 0.0;
  bool first = true;
  for (const auto& s : chart.series)
    for (double y : s.y) {
      if (first) ymin = ymax = y, first = false;
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (ymax - ymin < 1e-12) ymin -= 1.0, ymax += 1.0;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double pw = width - kLeft - kRight;
  const double ph = height - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
     << escape(chart.title) << "</text>\n";

  // grid and ticks
  const double xs = nice_step(xmax - xmin, 8);
  for (double t = std::ceil(xmin / xs) * xs; t <= xmax + 1e-9 * xs; t += xs) {
    const double x = px(t);
    os << "<line x1=\"" << fmt(x) << "\" y1=\"" << kTop << "\" x2=\"" << fmt(x) << "\" y2=\""
       << kTop + ph << "\" stroke=\"#e0e0e0\"/>\n"
       << "<text x=\"" << fmt(x) << "\" y=\"" << kTop + ph + 16
       << "\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
  }
  const double ys = nice_step(ymax - ymin, 6);
  for (double t = std::ceil(ymin / ys) * ys; t <= ymax + 1e-9 * ys; t += ys) {
    const double y = py(t);
    os << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(y) << "\" x2=\"" << kLeft + pw << "\" y2=\""
       << fmt(y) << "\" stroke=\"#e0e0e0\"/>\n"
       << "<text x=\"" << kLeft - 6 << "\" y=\"" << fmt(y + 4)
       << "\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
  }
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (ymin < 0.0 && ymax > 0.0)
    os << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(py(0.0)) << "\" x2=\"" << kLeft + pw
       << "\" y2=\"" << fmt(py(0.0)) << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";

  os << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << height - 12
     << "\" text-anchor=\"middle\">" << escape(chart.x_label) << "</text>\n"
     << "<text transform=\"translate(18," << fmt(kTop + ph / 2)
     << ") rotate(-90)\" text-anchor=\"middle\">" << escape(chart.y_label) << "</text>\n";

  for (std::size_t i = 0; i < chart.series.size(); ++i) {
    const auto& s = chart.series[i];
    os << "<polyline fill=\"none\" stroke=\"" << escape(s.color) << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < chart.x.size(); ++k)
      os << (k ? " " : "") << fmt(px(chart.x[k])) << ',' << fmt(py(s.y[k]));
    os << "\"/>\n";
    const double ly = kTop + 14 + 18.0 * static_cast<double>(i);
    os << "<line x1=\"" << kLeft + pw + 12 << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
       << kLeft + pw + 32 << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << escape(s.color)
       << "\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << kLeft + pw + 36 << "\" y=\"" << fmt(ly) << "\">" << escape(s.name)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace avogrip
