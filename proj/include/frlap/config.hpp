#pragma once

#include <map>
#include <string>
#include <vector>

namespace frlap {

// Flat key=value configuration with [section] headers. Keys are stored as
// "section.key"; every run writes the fully-resolved copy next to its outputs.
struct RunConfig {
  std::map<std::string, std::string> kv;

  bool has(const std::string& key) const { return kv.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_num(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_list(const std::string& key) const; // comma separated

  void set(const std::string& key, const std::string& value) { kv[key] = value; }

  static RunConfig parse_file(const std::string& path);
  static RunConfig parse_text(const std::string& text);
  void write_file(const std::string& path) const;
};

} // namespace frlap
