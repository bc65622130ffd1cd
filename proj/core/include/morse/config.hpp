#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "morse/model.hpp"
#include "morse/render.hpp"

namespace morse {

// Flat "key = value" text, '#' starts a comment. Keys are lower-case
// identifiers; '-' is accepted as a synonym for '_'.
using ConfigEntries = std::map<std::string, std::string>;

// Throws ConfigError naming the key for unknown keys and malformed lines.
ConfigEntries parse_config_text(std::string_view text);
ConfigEntries load_config_file(const std::filesystem::path& path);

struct RunConfig {
  std::optional<std::string> omega_e;
  std::optional<std::string> omega_chi;
  std::optional<double> mu;
  std::optional<double> q_min;
  std::optional<double> q_max;
  std::int64_t q_points = 1024;
  std::int64_t t_steps = 4096;
  std::int64_t depth = 7;
  std::filesystem::path out = ".";
  std::set<std::string> formats{"csv", "ppm", "svg"};
  render::Colormap colormap = render::Colormap::Viridis;
  int window = 5;
  double prominence = 0.01;

  bool wants(std::string_view format) const { return formats.count(std::string(format)) > 0; }

  // Parses omega_e / omega_chi / mu into validated parameters; ConfigError
  // names the offending field.
  MorseParams morse_params() const;
};

// Applies entries over base; later calls override earlier ones.
RunConfig apply_entries(RunConfig base, const ConfigEntries& entries);

}  // namespace morse
