#include "morse/commands.hpp"

#include <algorithm>
#include <cmath>

#include "morse/eigen.hpp"
#include "morse/errors.hpp"
#include "morse/render.hpp"

namespace morse {
namespace {

using render::CsvWriter;
using render::format_number;

std::string top_state_warning(const MorseSystem& system) {
  return "delta_N = 0: state n=" + std::to_string(system.derived.n_max) +
         " has no normalizable profile and is left out of psi(q,t); it still enters A(t)";
}

std::filesystem::path emit(CommandOutput& out, const RunConfig& config, const std::string& name,
                           std::string_view content) {
  const std::filesystem::path path = config.out / name;
  render::write_file_atomic(path, content);
  out.files.push_back(path);
  return path;
}

}  // namespace

std::string spectrum_csv(const MorseSystem& system) {
  const MorseParams& p = system.params;
  const DerivedParams& d = system.derived;
  CsvWriter csv({"n", "E_n_cm-1", "beat_gap_cm-1"});
  for (std::int64_t n = 0; n <= d.n_max; ++n) {
    csv.row({std::to_string(n), format_number(energy_level(p, d, n)),
             n >= 1 ? format_number(beat_gap(p, d, n)) : std::string()});
  }
  const RevivalTimes t = revival_times(p, d);
  csv.row({"D_cm-1", format_number(d.D), ""});
  csv.row({"nu", d.nu.str(), ""});
  csv.row({"n_max", std::to_string(d.n_max), ""});
  csv.row({"delta_N", d.delta_N.str(), ""});
  csv.row({"T_min_rev_ps", format_number(t.T_min_rev), ""});
  csv.row({"T_max_beat_ps", format_number(t.T_max_beat), ""});
  csv.row({"T_rev_ps", format_number(t.T_rev), ""});
  csv.row({"M", std::to_string(t.M), ""});
  csv.row({"N", std::to_string(t.N), ""});
  return csv.str();
}

std::string autocorr_csv(const AutocorrTrace& trace) {
  CsvWriter csv({"t_ps", "abs_A", "re_A", "im_A"});
  for (std::size_t j = 0; j < trace.values.size(); ++j) {
    const Complex a = trace.values[j];
    csv.row({format_number(trace.time.at(static_cast<std::int64_t>(j))), format_number(std::abs(a)),
             format_number(a.real()), format_number(a.imag())});
  }
  return csv.str();
}

std::string farey_csv(std::int64_t max_depth) {
  CsvWriter csv({"fraction", "depth", "center_x", "center_y", "radius", "left_parent",
                 "right_parent"});
  for (const farey::TreeEntry& e : farey::farey_tree(max_depth).entries) {
    const farey::FordCircle c = farey::ford_circle(e.frac);
    csv.row({e.frac.str(), std::to_string(e.depth), format_number(c.center.x),
             format_number(c.center.y), format_number(c.radius),
             e.parents ? e.parents->first.str() : "", e.parents ? e.parents->second.str() : ""});
  }
  return csv.str();
}

std::string annotate_csv(const std::vector<farey::FractionMatch>& rows) {
  CsvWriter csv({"t_ps", "fraction", "depth", "expected_kind", "observed_kind", "match"});
  for (const farey::FractionMatch& r : rows) {
    csv.row({format_number(r.observed ? r.observed->t : r.t_target), r.frac.str(),
             std::to_string(r.frac.depth()), to_string(r.expected),
             r.observed ? to_string(r.observed->kind) : "none", r.matched() ? "true" : "false"});
  }
  return csv.str();
}

CoordGrid run_grid(const MorseSystem& system, const RunConfig& config) {
  GridOptions options;
  options.n_points = config.q_points;
  CoordGrid grid = suggest_grid(system, options);
  if (config.q_min) grid.q_min = *config.q_min;
  if (config.q_max) grid.q_max = *config.q_max;
  grid.validate();
  return grid;
}

CommandOutput cmd_spectrum(const RunConfig& config) {
  const MorseSystem system(config.morse_params());
  CommandOutput out;
  emit(out, config, "spectrum.csv", spectrum_csv(system));
  return out;
}

CommandOutput cmd_evolve(const RunConfig& config) {
  const MorseSystem system(config.morse_params());
  const RevivalTimes times = system.revivals();
  const CoordGrid grid = run_grid(system, config);
  const TimeGrid tgrid{0.0, times.T_rev, config.t_steps};

  CommandOutput out;
  if (config.wants("ppm")) {
    const WavefieldGrid field = evolve(system, grid, tgrid);
    if (field.top_state_excluded) out.warnings.push_back(top_state_warning(system));
    render::HeatmapStyle style;
    style.colormap = config.colormap;
    const render::Image img = render::render_heatmap(field, style);
    emit(out, config, "heatmap.ppm", render::encode_ppm(img));

    const double peak = *std::max_element(field.magnitude.begin(), field.magnitude.end());
    std::string meta;
    meta += "format = P6\n";
    meta += "width = " + std::to_string(img.width) + "\n";
    meta += "height = " + std::to_string(img.height) + "\n";
    meta += "x_axis = q from " + format_number(grid.q_min) + " to " + format_number(grid.q_max) +
            " (left to right)\n";
    meta += "y_axis = t_ps from 0 at the top row to " + format_number(times.T_rev) +
            " at the bottom row (time increases downward)\n";
    meta += "value = |psi| linear, 0 -> colormap start, " + format_number(peak) +
            " -> colormap end\n";
    meta += std::string("colormap = ") +
            (config.colormap == render::Colormap::Viridis ? "viridis" : "grayscale") + "\n";
    emit(out, config, "heatmap.txt", meta);
  }
  if (config.wants("csv")) {
    emit(out, config, "autocorr.csv", autocorr_csv(autocorrelation(system, tgrid)));
  }
  return out;
}

CommandOutput cmd_farey(const RunConfig& config) {
  CommandOutput out;
  if (config.wants("csv")) emit(out, config, "farey.csv", farey_csv(config.depth));
  if (config.wants("svg")) {
    render::FordDiagramOptions options;
    options.max_depth = config.depth;
    emit(out, config, "ford.svg", render::ford_svg(options));
  }
  return out;
}

CommandOutput cmd_annotate(const RunConfig& config) {
  const MorseSystem system(config.morse_params());
  const double T_rev = system.revivals().T_rev;
  ExtremumOptions options;
  options.window = config.window;
  options.prominence = config.prominence;
  const AutocorrTrace trace =
      farey::annotate_revivals(revival_scan(system, config.t_steps, options), T_rev, config.depth);
  CommandOutput out;
  emit(out, config, "annotate.csv", annotate_csv(farey::match_fractions(trace, T_rev, config.depth)));
  return out;
}

CommandOutput cmd_classical(const RunConfig& config) {
  const MorseSystem system(config.morse_params());
  const TimeGrid tgrid{0.0, system.revivals().T_min_rev, config.t_steps};
  CommandOutput out;
  CsvWriter csv({"n", "E_cm-1", "t_ps", "q"});
  for (std::int64_t n = 0; n <= system.derived.n_max; ++n) {
    const double e = system.energy(n);
    if (e >= system.derived.D) {
      out.warnings.push_back("state n=" + std::to_string(n) +
                             " sits at the dissociation limit; no closed orbit");
      continue;
    }
    const std::vector<double> q = classical_trajectory(system, e, tgrid);
    for (std::int64_t j = 0; j < tgrid.n_steps; ++j) {
      csv.row({std::to_string(n), format_number(e), format_number(tgrid.at(j)),
               format_number(q[static_cast<std::size_t>(j)])});
    }
  }
  emit(out, config, "classical.csv", csv.str());
  return out;
}

}  // namespace morse
