#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "morse/config.hpp"
#include "morse/dynamics.hpp"
#include "morse/farey.hpp"
#include "morse/model.hpp"

namespace morse {

struct CommandOutput {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> warnings;
};

// Table bodies, exposed so they can be checked without touching the disk.
std::string spectrum_csv(const MorseSystem& system);
std::string autocorr_csv(const AutocorrTrace& trace);
std::string farey_csv(std::int64_t max_depth);
std::string annotate_csv(const std::vector<farey::FractionMatch>& rows);

// Coordinate grid for a run: suggest_grid() with the config overrides.
CoordGrid run_grid(const MorseSystem& system, const RunConfig& config);

// spectrum.csv
CommandOutput cmd_spectrum(const RunConfig& config);
// heatmap.ppm, heatmap.txt (orientation and scale), autocorr.csv
CommandOutput cmd_evolve(const RunConfig& config);
// farey.csv, ford.svg
CommandOutput cmd_farey(const RunConfig& config);
// annotate.csv
CommandOutput cmd_annotate(const RunConfig& config);
// classical.csv: trajectories of every bound level below D over one T_min_rev
CommandOutput cmd_classical(const RunConfig& config);

}  // namespace morse
