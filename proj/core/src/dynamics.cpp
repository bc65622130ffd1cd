#include "morse/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "morse/errors.hpp"

namespace morse {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Converts ps to the angular time variable tau in which phases are E * tau
// with E in cm^-1.
double to_tau(double t_ps) { return kTwoPi * kSpeedOfLightCmPerPs * t_ps; }
double to_ps(double tau) { return tau / (kTwoPi * kSpeedOfLightCmPerPs); }

struct PhasePoint {
  double q;
  double p;
};

// H = omega_chi p^2 + D (1 - e^{-q})^2 in cm^-1, with tau as time.
class MorseHamiltonian {
 public:
  explicit MorseHamiltonian(const MorseSystem& system)
      : kinetic_(system.params.omega_chi.to_double()), depth_(system.derived.D) {}

  double energy(const PhasePoint& s) const {
    const double u = 1.0 - std::exp(-s.q);
    return kinetic_ * s.p * s.p + depth_ * u * u;
  }
  double force(double q) const {
    const double e = std::exp(-q);
    return -2.0 * depth_ * (1.0 - e) * e;
  }
  PhasePoint rate(const PhasePoint& s) const { return {2.0 * kinetic_ * s.p, force(s.q)}; }

  PhasePoint rk4_step(const PhasePoint& s, double h) const {
    const PhasePoint k1 = rate(s);
    const PhasePoint k2 = rate({s.q + 0.5 * h * k1.q, s.p + 0.5 * h * k1.p});
    const PhasePoint k3 = rate({s.q + 0.5 * h * k2.q, s.p + 0.5 * h * k2.p});
    const PhasePoint k4 = rate({s.q + h * k3.q, s.p + h * k3.p});
    return {s.q + h / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q),
            s.p + h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p)};
  }

 private:
  double kinetic_;
  double depth_;
};

double max_step(const MorseSystem& system, const ClassicalOptions& options) {
  if (options.steps_per_harmonic_period < 16) {
    throw ConfigError("steps_per_harmonic_period", "must be >= 16");
  }
  return kTwoPi / system.params.omega_e.to_double() / options.steps_per_harmonic_period;
}

void check_orbit_energy(const DerivedParams& d, double energy) {
  if (!(energy > 0.0)) throw ConfigError("energy", "classical energy must be positive");
  if (energy >= d.D) throw ConfigError("energy", "unbound: E >= D has no outer turning point");
}

}  // namespace

void TimeGrid::validate() const {
  if (n_steps < 1) throw ConfigError("t_steps", "need at least one time sample");
  if (!(std::isfinite(t_min) && std::isfinite(t_max))) {
    throw ConfigError("t_min", "time bounds must be finite");
  }
  if (n_steps > 1 && !(t_min < t_max)) throw ConfigError("t_max", "need t_min < t_max");
}

Complex phase_factor(double energy, double t) {
  double turns = kSpeedOfLightCmPerPs * energy * t;
  turns -= std::floor(turns);
  return std::polar(1.0, -kTwoPi * turns);
}

PacketBasis::PacketBasis(const MorseSystem& system, const CoordGrid& grid)
    : grid_(grid), states_(eigenbasis(system, grid)) {
  top_excluded_ = static_cast<std::int64_t>(states_.size()) < system.derived.state_count();
}

void PacketBasis::amplitude(double t, std::span<Complex> out) const {
  if (out.size() != static_cast<std::size_t>(grid_.n_points)) {
    throw ConfigError("amplitude: output span does not match grid");
  }
  std::fill(out.begin(), out.end(), Complex{});
  for (const EigenState& st : states_) {
    const Complex f = phase_factor(st.energy, t);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += f * st.values[i];
  }
}

std::vector<Complex> PacketBasis::amplitude(double t) const {
  std::vector<Complex> out(static_cast<std::size_t>(grid_.n_points));
  amplitude(t, out);
  return out;
}

std::vector<Complex> wavepacket(const MorseSystem& system, const CoordGrid& grid, double t) {
  if (!std::isfinite(t)) throw ConfigError("t", "time must be finite");
  return PacketBasis(system, grid).amplitude(t);
}

WavefieldGrid evolve(const MorseSystem& system, const CoordGrid& grid, const TimeGrid& tgrid,
                     const EvolveOptions& options) {
  grid.validate();
  tgrid.validate();
  const auto rows = static_cast<std::size_t>(tgrid.n_steps);
  const auto cols = static_cast<std::size_t>(grid.n_points);
  const std::size_t required = rows * cols * (sizeof(Complex) + sizeof(double));
  if (required / rows / cols != sizeof(Complex) + sizeof(double) ||
      required > options.memory_budget_bytes) {
    throw NumericError("evolve: wavefield needs " + std::to_string(required) +
                       " bytes, budget is " + std::to_string(options.memory_budget_bytes) +
                       " bytes");
  }

  const PacketBasis basis(system, grid);
  WavefieldGrid field;
  field.coord = grid;
  field.time = tgrid;
  field.top_state_excluded = basis.top_state_excluded();
  field.amplitude.resize(rows * cols);
  field.magnitude.resize(rows * cols);

  const auto fill_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      std::span<Complex> row(field.amplitude.data() + j * cols, cols);
      basis.amplitude(tgrid.at(static_cast<std::int64_t>(j)), row);
      for (std::size_t i = 0; i < cols; ++i) field.magnitude[j * cols + i] = std::abs(row[i]);
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(rows, 64)));
  if (threads == 1) {
    fill_rows(0, rows);
    return field;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (rows + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(rows, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back(fill_rows, begin, end);
  }
  for (auto& th : workers) th.join();
  return field;
}

const char* to_string(ExtremumKind kind) { return kind == ExtremumKind::Peak ? "peak" : "node"; }

std::vector<ExtremumIndex> extremum_detect(std::span<const double> magnitude,
                                           const ExtremumOptions& options) {
  std::vector<ExtremumIndex> out;
  if (options.window < 1) throw ConfigError("window", "must be >= 1");
  const auto w = static_cast<std::size_t>(options.window);
  const std::size_t total = magnitude.size();
  // A periodic trace repeats its first sample at the end.
  const std::size_t unique = options.periodic && total > 0 ? total - 1 : total;
  if (unique < 2 * w + 1) return out;

  const double reference =
      options.reference ? *options.reference
                        : *std::max_element(magnitude.begin(), magnitude.end());
  const double threshold = options.prominence * reference;

  const auto sample = [&](std::size_t center, std::ptrdiff_t offset) {
    auto k = static_cast<std::ptrdiff_t>(center) + offset;
    if (options.periodic) {
      const auto u = static_cast<std::ptrdiff_t>(unique);
      k = ((k % u) + u) % u;
    }
    return magnitude[static_cast<std::size_t>(k)];
  };

  const std::size_t first = options.periodic ? 0 : w;
  const std::size_t last = options.periodic ? unique : unique - w;
  for (std::size_t j = first; j < last; ++j) {
    const double v = magnitude[j];
    bool is_max = true;
    bool is_min = true;
    for (std::ptrdiff_t o = -static_cast<std::ptrdiff_t>(w); o <= static_cast<std::ptrdiff_t>(w);
         ++o) {
      if (o == 0) continue;
      const double u = sample(j, o);
      if (u >= v) is_max = false;
      if (u <= v) is_min = false;
      if (!is_max && !is_min) break;
    }
    if (!is_max && !is_min) continue;
    const double edge_mean =
        0.5 * (sample(j, -static_cast<std::ptrdiff_t>(w)) + sample(j, static_cast<std::ptrdiff_t>(w)));
    if (is_max && v - edge_mean >= threshold) out.push_back({j, ExtremumKind::Peak});
    if (is_min && edge_mean - v >= threshold) out.push_back({j, ExtremumKind::Node});
  }
  if (options.periodic && !out.empty() && out.front().index == 0) {
    out.push_back({total - 1, out.front().kind});
  }
  return out;
}

std::vector<double> AutocorrTrace::magnitude() const {
  std::vector<double> m(values.size());
  std::transform(values.begin(), values.end(), m.begin(), [](Complex z) { return std::abs(z); });
  return m;
}

AutocorrTrace autocorrelation(const MorseSystem& system, const TimeGrid& tgrid,
                              ExtremumOptions options) {
  tgrid.validate();
  std::vector<double> energies;
  for (std::int64_t n = 0; n <= system.derived.n_max; ++n) energies.push_back(system.energy(n));

  AutocorrTrace trace;
  trace.time = tgrid;
  trace.reference = static_cast<double>(energies.size());
  trace.values.resize(static_cast<std::size_t>(tgrid.n_steps));
  for (std::int64_t j = 0; j < tgrid.n_steps; ++j) {
    const double t = tgrid.at(j);
    Complex sum{};
    for (double e : energies) sum += phase_factor(e, t);
    trace.values[static_cast<std::size_t>(j)] = sum;
  }

  if (!options.reference) options.reference = trace.reference;
  const std::vector<double> mag = trace.magnitude();
  for (const ExtremumIndex& e : extremum_detect(mag, options)) {
    trace.extrema.push_back({tgrid.at(static_cast<std::int64_t>(e.index)), e.index, e.kind, {}});
  }
  return trace;
}

AutocorrTrace revival_scan(const MorseSystem& system, std::int64_t n_steps,
                           ExtremumOptions options) {
  options.periodic = true;
  const TimeGrid tgrid{0.0, system.revivals().T_rev, n_steps};
  return autocorrelation(system, tgrid, options);
}

std::pair<double, double> turning_points(const DerivedParams& derived, double energy) {
  if (energy < 0.0) throw ConfigError("energy", "energy below the well minimum");
  if (energy >= derived.D) {
    throw ConfigError("energy", "unbound: E >= D has no outer turning point");
  }
  const double r = std::sqrt(energy / derived.D);
  return {-std::log1p(r), -std::log1p(-r)};
}

std::vector<double> classical_trajectory(const MorseSystem& system, double energy,
                                         const TimeGrid& tgrid, const ClassicalOptions& options) {
  tgrid.validate();
  check_orbit_energy(system.derived, energy);
  if (tgrid.t_min < 0.0) throw ConfigError("t_min", "trajectory starts at t = 0");

  const MorseHamiltonian h(system);
  const double h_max = max_step(system, options);
  PhasePoint s{turning_points(system.derived, energy).first, 0.0};
  double tau = 0.0;
  double max_drift = 0.0;
  int inner_returns = 0;

  std::vector<double> q(static_cast<std::size_t>(tgrid.n_steps));
  for (std::int64_t j = 0; j < tgrid.n_steps; ++j) {
    const double target = to_tau(tgrid.at(j));
    const double span = target - tau;
    if (span > 0.0) {
      const auto steps = static_cast<std::int64_t>(std::ceil(span / h_max));
      const double dt = span / static_cast<double>(steps);
      for (std::int64_t k = 0; k < steps; ++k) {
        const PhasePoint next = h.rk4_step(s, dt);
        if (s.p < 0.0 && next.p >= 0.0) ++inner_returns;
        s = next;
        max_drift = std::max(max_drift, std::fabs(h.energy(s) - energy) / energy);
      }
      tau = target;
    }
    q[static_cast<std::size_t>(j)] = s.q;
  }
  if (max_drift > options.max_relative_drift * std::max(1, inner_returns + 1)) {
    throw NumericError("classical_trajectory: relative energy drift " +
                       std::to_string(max_drift) + " exceeds bound; use a finer step");
  }
  return q;
}

double classical_period(const MorseSystem& system, double energy,
                        const ClassicalOptions& options) {
  check_orbit_energy(system.derived, energy);
  const MorseHamiltonian h(system);
  const double dt = max_step(system, options);
  PhasePoint s{turning_points(system.derived, energy).first, 0.0};
  double tau = 0.0;
  double max_drift = 0.0;
  bool outward = true;  // p > 0 until the outer turning point

  for (std::int64_t k = 0; k < 100'000'000; ++k) {
    const PhasePoint next = h.rk4_step(s, dt);
    max_drift = std::max(max_drift, std::fabs(h.energy(next) - energy) / energy);
    if (outward && next.p < 0.0) outward = false;
    if (!outward && s.p < 0.0 && next.p >= 0.0) {
      // Cubic Hermite model of p over the step, with dp/dtau = force(q).
      const double p0 = s.p, p1 = next.p;
      const double m0 = h.force(s.q) * dt, m1 = h.force(next.q) * dt;
      const auto p_at = [&](double u) {
        const double u2 = u * u, u3 = u2 * u;
        return (2 * u3 - 3 * u2 + 1) * p0 + (u3 - 2 * u2 + u) * m0 + (-2 * u3 + 3 * u2) * p1 +
               (u3 - u2) * m1;
      };
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p_at(mid) < 0.0 ? lo : hi) = mid;
      }
      if (max_drift > options.max_relative_drift) {
        throw NumericError("classical_period: relative energy drift " +
                           std::to_string(max_drift) + " exceeds bound; use a finer step");
      }
      return to_ps(tau + 0.5 * (lo + hi) * dt);
    }
    s = next;
    tau += dt;
  }
  throw NumericError("classical_period: orbit did not close");
}

}  // namespace morse
