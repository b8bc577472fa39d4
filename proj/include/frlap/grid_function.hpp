#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace frlap {

// Sampled trace function on a uniform 1D grid, with optional far-field
// asymptote declarations used by the singular-integral tails.
struct GridFunction {
  double x0 = 0.0;
  double h = 1.0;
  std::vector<double> values;
  std::optional<double> left_asymptote;
  std::optional<double> right_asymptote;
  enum class Decay { none, power_2s };
  Decay decay = Decay::none;

  std::size_t size() const { return values.size(); }
  double x(std::size_t i) const { return x0 + h * static_cast<double>(i); }
  double x_end() const { return x(values.size() - 1); }

  // Construction with invariant checks. `asymptote_slack` bounds how far the
  // boundary samples may sit from a declared asymptote.
  static GridFunction make(double x0, double h, std::vector<double> values,
                           std::optional<double> left = std::nullopt,
                           std::optional<double> right = std::nullopt,
                           Decay decay = Decay::none,
                           double asymptote_slack = 0.5);

  static GridFunction sample(double x0, double h, std::size_t npts,
                             const std::function<double(double)>& f,
                             std::optional<double> left = std::nullopt,
                             std::optional<double> right = std::nullopt,
                             Decay decay = Decay::none);
};

// CSV ("x,value" header) plus JSON sidecar at path + ".json" with grid
// metadata; `extra` lets callers stash context such as the fraction s.
void write_grid_function(const GridFunction& g, const std::string& csv_path,
                         const std::vector<std::pair<std::string, double>>& extra = {});
GridFunction read_grid_function(const std::string& csv_path);

} // namespace frlap
