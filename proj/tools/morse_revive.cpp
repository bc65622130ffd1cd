// morse-revive: Morse oscillator spectra, wavepacket revivals and Farey/Ford
// diagrams from the command line.
//
// Exit codes: 0 success, 2 configuration error, 3 numeric failure.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "morse/commands.hpp"
#include "morse/config.hpp"
#include "morse/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Flags {
  std::string config_file;
  std::map<std::string, std::string> values;
};

void add_common_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config_file, "key = value config file");
  const auto opt = [&](const char* flag, const char* key, const char* help) {
    cmd->add_option_function<std::string>(
        flag, [&flags, key](const std::string& v) { flags.values[key] = v; }, help);
  };
  opt("--omega-e", "omega_e", "harmonic wavenumber in cm^-1, e.g. 18 or 52/3");
  opt("--omega-chi", "omega_chi", "anharmonic wavenumber in cm^-1");
  opt("--mu", "mu", "reduced mass in amu");
  opt("--depth", "depth", "maximum Farey depth (denominator)");
  opt("--out", "out", "output directory");
  opt("--t-steps", "t_steps", "time samples over one revival period");
  opt("--q-points", "q_points", "coordinate grid points");
  opt("--q-min", "q_min", "override grid start");
  opt("--q-max", "q_max", "override grid end");
  opt("--formats", "formats", "comma list of csv,ppm,svg");
  opt("--colormap", "colormap", "grayscale or viridis");
  opt("--window", "window", "extremum detector half-window in samples");
  opt("--prominence", "prominence", "extremum prominence as a fraction of A(0)");
}

morse::RunConfig resolve(const Flags& flags) {
  morse::RunConfig cfg;
  if (!flags.config_file.empty()) {
    cfg = morse::apply_entries(cfg, morse::load_config_file(flags.config_file));
  }
  return morse::apply_entries(cfg, flags.values);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse oscillator revivals and Farey-Ford geometry"};
  app.require_subcommand(1);

  using Command = std::function<morse::CommandOutput(const morse::RunConfig&)>;
  const std::map<std::string, std::pair<std::string, Command>> commands{
      {"spectrum", {"energy levels, beat gaps and revival times (spectrum.csv)", morse::cmd_spectrum}},
      {"evolve", {"|psi(q,t)| heatmap over one revival and A(t) table", morse::cmd_evolve}},
      {"farey", {"Farey tree table and Ford circle diagram", morse::cmd_farey}},
      {"annotate", {"match |A(t)| extrema to Farey fractions of T_rev", morse::cmd_annotate}},
      {"classical", {"classical trajectories of the bound levels", morse::cmd_classical}},
  };

  Flags flags;
  std::map<CLI::App*, const Command*> dispatch;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    add_common_flags(sub, flags);
    dispatch[sub] = &entry.second;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    for (const auto& [sub, command] : dispatch) {
      if (!sub->parsed()) continue;
      const morse::CommandOutput out = (*command)(resolve(flags));
      for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
      for (const auto& f : out.files) std::cout << f.string() << "\n";
    }
  } catch (const morse::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const morse::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
