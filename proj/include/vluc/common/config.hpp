#pragma once

// A small reader for the TOML subset used by experiment files:
//
//   # comment
//   [section]
//   key = 42
//   name = "text"
//   flag = true
//   list = ["a", "b"]      # or [1, 2, 3]
//
// Keys are addressed as "section.key". Nested tables, inline tables,
// multi-line strings and dates-as-values are not supported.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vluc {

class Config {
 public:
  static Config parse(std::istream& in);
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<std::int64_t> get_int(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::vector<std::string> get_list(const std::string& key) const;

  std::string string_or(const std::string& key, const std::string& fallback) const {
    return get_string(key).value_or(fallback);
  }
  double double_or(const std::string& key, double fallback) const { return get_double(key).value_or(fallback); }
  std::int64_t int_or(const std::string& key, std::int64_t fallback) const { return get_int(key).value_or(fallback); }
  bool bool_or(const std::string& key, bool fallback) const { return get_bool(key).value_or(fallback); }

  /// Overrides or inserts a raw scalar value (used for command-line flags).
  void set(const std::string& key, const std::string& raw_value);

  const std::map<std::string, std::string>& raw() const { return values_; }

 private:
  // Raw textual value with strings already unquoted; lists keep brackets.
  std::map<std::string, std::string> values_;
};

}  // namespace vluc
