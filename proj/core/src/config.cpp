#include "vecbeam/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vecbeam/errors.hpp"

namespace vecbeam {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

std::pair<std::string, std::string> split_key(std::string_view dotted) {
  const auto dot = dotted.rfind('.');
  if (dot == std::string_view::npos) return {"", std::string(dotted)};
  return {std::string(dotted.substr(0, dot)), std::string(dotted.substr(dot + 1))};
}

}  // namespace

Config Config::parse(std::string_view text) {
  Config cfg;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", line_no);
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!valid_name(section)) throw ConfigError("invalid section name '" + section + "'", line_no);
      cfg.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line_no);
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!valid_name(key)) throw ConfigError("invalid key '" + key + "'", line_no);
    auto& sec = cfg.sections_[section];
    if (sec.contains(key)) {
      throw ConfigError("duplicate key '" + (section.empty() ? key : section + "." + key) + "'", line_no);
    }
    sec.emplace(key, std::move(value));
    cfg.lines_[section.empty() ? key : section + "." + key] = line_no;
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::optional<std::string> Config::find(std::string_view dotted_key) const {
  const auto [section, key] = split_key(dotted_key);
  const auto s = sections_.find(section);
  if (s == sections_.end()) return std::nullopt;
  const auto k = s->second.find(key);
  if (k == s->second.end()) return std::nullopt;
  return k->second;
}

bool Config::has(std::string_view dotted_key) const { return find(dotted_key).has_value(); }

std::string Config::require_string(std::string_view dotted_key) const {
  auto v = find(dotted_key);
  if (!v || v->empty()) throw ConfigError("missing required field '" + std::string(dotted_key) + "'");
  return *v;
}

namespace {

double to_double(const std::string& text, std::string_view key, int line) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("field '" + std::string(key) + "' expects a number, got '" + text + "'", line);
  }
  return v;
}

}  // namespace

double Config::require_double(std::string_view dotted_key) const {
  const auto it = lines_.find(std::string(dotted_key));
  return to_double(require_string(dotted_key), dotted_key, it == lines_.end() ? 0 : it->second);
}

std::string Config::get_string(std::string_view dotted_key, std::string fallback) const {
  auto v = find(dotted_key);
  return v ? *v : std::move(fallback);
}

double Config::get_double(std::string_view dotted_key, double fallback) const {
  return has(dotted_key) ? require_double(dotted_key) : fallback;
}

int Config::get_int(std::string_view dotted_key, int fallback) const {
  if (!has(dotted_key)) return fallback;
  const std::string text = require_string(dotted_key);
  int v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    const auto it = lines_.find(std::string(dotted_key));
    throw ConfigError("field '" + std::string(dotted_key) + "' expects an integer, got '" + text + "'",
                      it == lines_.end() ? 0 : it->second);
  }
  return v;
}

bool Config::get_bool(std::string_view dotted_key, bool fallback) const {
  if (!has(dotted_key)) return fallback;
  std::string text = require_string(dotted_key);
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
  if (text == "true" || text == "yes" || text == "on" || text == "1") return true;
  if (text == "false" || text == "no" || text == "off" || text == "0") return false;
  throw ConfigError("field '" + std::string(dotted_key) + "' expects a boolean, got '" + text + "'");
}

std::vector<double> Config::get_doubles(std::string_view dotted_key, std::vector<double> fallback) const {
  if (!has(dotted_key)) return fallback;
  const std::string text = *find(dotted_key);
  std::vector<double> out;
  if (trim(text).empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = trim(std::string_view(text).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    out.push_back(to_double(item, dotted_key, 0));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::string> Config::keys() const {
  std::vector<std::string> out;
  for (const auto& [section, keys] : sections_) {
    for (const auto& entry : keys) out.push_back(section.empty() ? entry.first : section + "." + entry.first);
  }
  return out;
}

int Config::line(std::string_view dotted_key) const {
  const auto it = lines_.find(std::string(dotted_key));
  return it == lines_.end() ? 0 : it->second;
}

void Config::set(std::string_view dotted_key, std::string value) {
  const auto [section, key] = split_key(dotted_key);
  if (!valid_name(key) || (!section.empty() && !valid_name(section))) {
    throw ConfigError("invalid key '" + std::string(dotted_key) + "'");
  }
  sections_[section][key] = trim(value);
}

void Config::apply_overrides(const std::vector<std::string>& overrides) {
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + o + "' is not of the form key=value");
    set(trim(std::string_view(o).substr(0, eq)), o.substr(eq + 1));
  }
}

std::string Config::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [section, keys] : sections_) {
    if (section.empty() && keys.empty()) continue;
    if (!section.empty()) {
      if (!first) out << '\n';
      out << '[' << section << "]\n";
    }
    for (const auto& [k, v] : keys) out << k << " = " << v << '\n';
    first = false;
  }
  return out.str();
}

}  // namespace vecbeam
