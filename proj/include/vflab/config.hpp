#pragma once

#include <map>
#include <string>
#include <vector>

namespace vflab {

/// Flat key = value config text: one assignment per line, `#` starts a
/// comment, blank lines ignored. Values are scalars or comma-separated
/// scalar lists. Keys must belong to the schema of the configured
/// experiment; unknown keys are errors.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_text(const std::string& text, const std::string& origin);

  bool has(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;

  /// Raises ConfigError when a present key is not in `allowed`.
  void require_known(const std::vector<std::string>& allowed) const;

  const std::string& origin() const { return origin_; }

 private:
  std::map<std::string, std::string> kv_;
  std::string origin_;
};

}  // namespace vflab
