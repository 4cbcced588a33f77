#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vecbeam {

/// Sectioned key = value text configuration.
///
///   # comment
///   [beam]
///   w0 = 1e-3
///
/// Keys are addressed as "section.key"; keys before any section header live
/// in the unnamed section and are addressed without a dot. Parse errors and
/// duplicate keys throw ConfigError with the offending line number.
class Config {
 public:
  static Config parse(std::string_view text);
  static Config load(const std::string& path);

  bool has(std::string_view dotted_key) const;
  std::optional<std::string> find(std::string_view dotted_key) const;

  /// Throws ConfigError naming the key when it is missing or malformed.
  std::string require_string(std::string_view dotted_key) const;
  double require_double(std::string_view dotted_key) const;

  std::string get_string(std::string_view dotted_key, std::string fallback) const;
  double get_double(std::string_view dotted_key, double fallback) const;
  int get_int(std::string_view dotted_key, int fallback) const;
  bool get_bool(std::string_view dotted_key, bool fallback) const;
  /// Comma-separated doubles.
  std::vector<double> get_doubles(std::string_view dotted_key, std::vector<double> fallback) const;

  /// All keys in dotted form, sorted.
  std::vector<std::string> keys() const;
  /// Source line of a parsed key, 0 when unknown or set programmatically.
  int line(std::string_view dotted_key) const;

  void set(std::string_view dotted_key, std::string value);
  /// Applies "section.key=value" overrides. Throws ConfigError on a bad token.
  void apply_overrides(const std::vector<std::string>& overrides);

  /// Canonical text: sections and keys sorted, one `key = value` per line.
  std::string to_string() const;

  friend bool operator==(const Config& a, const Config& b) { return a.sections_ == b.sections_; }

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
  std::map<std::string, int> lines_;
};

}  // namespace vecbeam
