#include "morse/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "morse/errors.hpp"

namespace morse {
namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "omega_e", "omega_chi", "mu",     "q_min",   "q_max",    "q_points", "t_steps",
      "depth",   "out",       "formats", "colormap", "window", "prominence"};
  return keys;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

std::int64_t parse_int(const std::string& field, const std::string& text, std::int64_t min) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(field, "expected an integer, got '" + text + "'");
  }
  if (v < min) throw ConfigError(field, "must be >= " + std::to_string(min));
  return v;
}

double parse_real(const std::string& field, const std::string& text) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError(field, "expected a real number, got '" + text + "'");
  }
  return v;
}

}  // namespace

ConfigEntries parse_config_text(std::string_view text) {
  ConfigEntries entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string key = normalize_key(trim(std::string_view(line).substr(0, eq)));
    if (!known_keys().count(key)) throw ConfigError(key, "unknown config key");
    entries[key] = trim(std::string_view(line).substr(eq + 1));
  }
  return entries;
}

ConfigEntries load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

RunConfig apply_entries(RunConfig cfg, const ConfigEntries& entries) {
  for (const auto& [raw_key, value] : entries) {
    const std::string key = normalize_key(raw_key);
    if (key == "omega_e") {
      cfg.omega_e = value;
    } else if (key == "omega_chi") {
      cfg.omega_chi = value;
    } else if (key == "mu") {
      cfg.mu = parse_real(key, value);
    } else if (key == "q_min") {
      cfg.q_min = parse_real(key, value);
    } else if (key == "q_max") {
      cfg.q_max = parse_real(key, value);
    } else if (key == "q_points") {
      cfg.q_points = parse_int(key, value, 2);
    } else if (key == "t_steps") {
      cfg.t_steps = parse_int(key, value, 2);
    } else if (key == "depth") {
      cfg.depth = parse_int(key, value, 1);
    } else if (key == "out") {
      if (value.empty()) throw ConfigError(key, "empty output directory");
      cfg.out = value;
    } else if (key == "formats") {
      std::set<std::string> formats;
      std::istringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item != "csv" && item != "ppm" && item != "svg") {
          throw ConfigError(key, "unknown format '" + item + "'");
        }
        formats.insert(item);
      }
      cfg.formats = std::move(formats);
    } else if (key == "colormap") {
      cfg.colormap = render::parse_colormap(value);
    } else if (key == "window") {
      cfg.window = static_cast<int>(parse_int(key, value, 1));
    } else if (key == "prominence") {
      cfg.prominence = parse_real(key, value);
      if (cfg.prominence < 0) throw ConfigError(key, "must be >= 0");
    } else {
      throw ConfigError(key, "unknown config key");
    }
  }
  return cfg;
}

MorseParams RunConfig::morse_params() const {
  const auto field = [](const std::optional<std::string>& text, const char* name) {
    if (!text) throw ConfigError(name, "required");
    try {
      return parse_rational(*text);
    } catch (const ConfigError& e) {
      throw ConfigError(name, e.what());
    }
  };
  MorseParams p{field(omega_e, "omega_e"), field(omega_chi, "omega_chi"), mu};
  derive(p);  // validates
  return p;
}

}  // namespace morse
