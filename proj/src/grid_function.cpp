#include "frlap/grid_function.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace frlap {

GridFunction GridFunction::make(double x0, double h, std::vector<double> values,
                                std::optional<double> left,
                                std::optional<double> right, Decay decay,
                                double asymptote_slack) {
  if (values.empty()) throw std::invalid_argument("GridFunction: empty values");
  if (!(h > 0.0)) throw std::invalid_argument("GridFunction: h must be > 0");
  if (left && std::abs(values.front() - *left) > asymptote_slack)
    throw std::invalid_argument("GridFunction: left boundary sample too far from declared asymptote");
  if (right && std::abs(values.back() - *right) > asymptote_slack)
    throw std::invalid_argument("GridFunction: right boundary sample too far from declared asymptote");
  GridFunction g;
  g.x0 = x0;
  g.h = h;
  g.values = std::move(values);
  g.left_asymptote = left;
  g.right_asymptote = right;
  g.decay = decay;
  return g;
}

GridFunction GridFunction::sample(double x0, double h, std::size_t npts,
                                  const std::function<double(double)>& f,
                                  std::optional<double> left,
                                  std::optional<double> right, Decay decay) {
  std::vector<double> v(npts);
  for (std::size_t i = 0; i < npts; ++i) v[i] = f(x0 + h * static_cast<double>(i));
  return make(x0, h, std::move(v), left, right, decay);
}

namespace {

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

void write_grid_function(const GridFunction& g, const std::string& csv_path,
                         const std::vector<std::pair<std::string, double>>& extra) {
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot open " + csv_path);
  out << "x,value\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out << fmt_g17(g.x(i)) << ',' << fmt_g17(g.values[i]) << '\n';
  out.close();

  nlohmann::ordered_json meta;
  meta["x0"] = g.x0;
  meta["h"] = g.h;
  meta["n"] = g.size();
  if (g.left_asymptote) meta["left_asymptote"] = *g.left_asymptote;
  if (g.right_asymptote) meta["right_asymptote"] = *g.right_asymptote;
  meta["decay"] = g.decay == GridFunction::Decay::power_2s ? "power2s" : "none";
  for (const auto& [k, v] : extra) meta[k] = v;
  std::ofstream js(csv_path + ".json");
  js << meta.dump(2) << '\n';
}

GridFunction read_grid_function(const std::string& csv_path) {
  std::ifstream js(csv_path + ".json");
  if (!js) throw std::runtime_error("missing sidecar for " + csv_path);
  nlohmann::json meta = nlohmann::json::parse(js);

  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path);
  std::string line;
  std::getline(in, line); // header
  std::vector<double> vals;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) continue;
    vals.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
  }
  std::optional<double> left, right;
  if (meta.contains("left_asymptote")) left = meta["left_asymptote"].get<double>();
  if (meta.contains("right_asymptote")) right = meta["right_asymptote"].get<double>();
  auto decay = meta.value("decay", "none") == std::string("power2s")
                   ? GridFunction::Decay::power_2s
                   : GridFunction::Decay::none;
  return GridFunction::make(meta["x0"].get<double>(), meta["h"].get<double>(),
                            std::move(vals), left, right, decay,
                            std::numeric_limits<double>::infinity());
}

} // namespace frlap
