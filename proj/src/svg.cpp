#include "frlap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace frlap {

namespace {

constexpr int kW = 720, kH = 420;
constexpr int kL = 64, kR = 16, kT = 36, kB = 44;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(lo < hi)) { lo -= 1.0; hi += 1.0; }
    const double m = 0.05 * (hi - lo);
    lo -= m;
    hi += m;
  }
};

} // namespace

void write_svg_chart(const std::string& path, const std::string& title,
                     const std::vector<SvgSeries>& series,
                     const std::string& x_label, const std::string& y_label) {
  Range rx, ry;
  for (const auto& s : series) {
    for (double v : s.x) rx.add(v);
    for (double v : s.y) ry.add(v);
  }
  rx.pad();
  ry.pad();
  auto px = [&](double v) { return kL + (v - rx.lo) / (rx.hi - rx.lo) * (kW - kL - kR); };
  auto py = [&](double v) { return kH - kB - (v - ry.lo) / (ry.hi - ry.lo) * (kH - kT - kB); };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
      << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
  out << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\" "
         "font-family=\"sans-serif\">" << title << "</text>\n";

  // frame and ticks
  out << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR
      << "\" height=\"" << kH - kT - kB << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = rx.lo + k * (rx.hi - rx.lo) / 4.0;
    const double yv = ry.lo + k * (ry.hi - ry.lo) / 4.0;
    out << "<text x=\"" << px(xv) << "\" y=\"" << kH - kB + 16
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
        << num(xv) << "</text>\n";
    out << "<text x=\"" << kL - 6 << "\" y=\"" << py(yv) + 4
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
        << num(yv) << "</text>\n";
    out << "<line x1=\"" << px(xv) << "\" y1=\"" << kH - kB << "\" x2=\"" << px(xv)
        << "\" y2=\"" << kH - kB + 4 << "\" stroke=\"#444\"/>\n";
    out << "<line x1=\"" << kL - 4 << "\" y1=\"" << py(yv) << "\" x2=\"" << kL
        << "\" y2=\"" << py(yv) << "\" stroke=\"#444\"/>\n";
  }
  out << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 8
      << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
      << x_label << "</text>\n";
  if (!y_label.empty())
    out << "<text x=\"14\" y=\"" << kH / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 14 " << kH / 2 << ")\">" << y_label << "</text>\n";

  int li = 0;
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (!std::isfinite(s.y[k])) continue;
      out << num(px(s.x[k])) << ',' << num(py(s.y[k])) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << kW - kR - 8 << "\" y=\"" << kT + 16 + 16 * li
        << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\" fill=\""
        << s.color << "\">" << s.label << "</text>\n";
    ++li;
  }
  out << "</svg>\n";
}

void write_svg_strip(const std::string& path, const std::string& title,
                     const std::vector<double>& x, const std::vector<double>& value) {
  if (x.size() != value.size() || x.empty())
    throw std::invalid_argument("write_svg_strip: size mismatch");
  Range rv;
  for (double v : value) rv.add(v);
  if (!(rv.lo < rv.hi)) { rv.lo -= 1.0; rv.hi += 1.0; }

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  const int W = 720, H = 120, L = 40, R = 16, T = 32, B = 28;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
      << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\" "
         "font-family=\"sans-serif\">" << title << "</text>\n";
  const double cw = double(W - L - R) / x.size();
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double tnorm = (value[k] - rv.lo) / (rv.hi - rv.lo);
    const int r = static_cast<int>(255 * (1.0 - tnorm));
    const int b = static_cast<int>(255 * tnorm);
    char color[16];
    std::snprintf(color, sizeof(color), "#%02x40%02x", r, b);
    out << "<rect x=\"" << num(L + k * cw) << "\" y=\"" << T << "\" width=\""
        << num(cw + 0.5) << "\" height=\"" << H - T - B << "\" fill=\"" << color
        << "\"/>\n";
  }
  out << "<text x=\"" << L << "\" y=\"" << H - 8 << "\" font-size=\"11\" "
         "font-family=\"sans-serif\">" << num(x.front()) << "</text>\n";
  out << "<text x=\"" << W - R << "\" y=\"" << H - 8 << "\" text-anchor=\"end\" "
         "font-size=\"11\" font-family=\"sans-serif\">" << num(x.back()) << "</text>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"" << H - 8 << "\" text-anchor=\"middle\" "
         "font-size=\"11\" font-family=\"sans-serif\">min " << num(rv.lo) << ", max "
      << num(rv.hi) << "</text>\n";
  out << "</svg>\n";
}

} // namespace frlap
