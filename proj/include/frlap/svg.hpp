#pragma once

#include <string>
#include <vector>

namespace frlap {

// Static SVG line chart; no timestamps or external resources, so identical
// inputs produce identical bytes.
struct SvgSeries {
  std::string label;
  std::string color; // css color
  std::vector<double> x, y;
};

void write_svg_chart(const std::string& path, const std::string& title,
                     const std::vector<SvgSeries>& series,
                     const std::string& x_label = "x",
                     const std::string& y_label = "");

// Single-row heat strip (used for the margin-vs-x view).
void write_svg_strip(const std::string& path, const std::string& title,
                     const std::vector<double>& x, const std::vector<double>& value);

} // namespace frlap
