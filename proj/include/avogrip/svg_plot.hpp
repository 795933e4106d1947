#pragma once

#include <string>
#include <vector>

namespace avogrip {

struct PlotSeries {
  std::string name;
  std::string color;  // any SVG color
  std::vector<double> y;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<PlotSeries> series;  // each series.y aligned with x
};

/// Renders a standalone SVG document with one polyline per series, axes,
/// ticks and a legend. No external assets; output is deterministic.
std::string render_svg(const LineChart& chart, int width = 720, int height = 440);

}  // namespace avogrip
