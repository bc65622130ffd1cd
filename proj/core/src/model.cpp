#include "morse/model.hpp"

#include <string>

#include "morse/errors.hpp"

namespace morse {
namespace {

void check_bound(const DerivedParams& d, std::int64_t n, std::int64_t lo, const char* what) {
  if (n < lo || n > d.n_max) {
    throw ConfigError("n", std::string(what) + ": n=" + std::to_string(n) + " outside [" +
                               std::to_string(lo) + ", " + std::to_string(d.n_max) + "]");
  }
}

}  // namespace

DerivedParams derive(const MorseParams& params) {
  if (params.omega_chi <= Rational(0)) {
    throw ConfigError("omega_chi", "must be positive (harmonic limit has no quantum defect)");
  }
  if (params.omega_e <= Rational(0)) throw ConfigError("omega_e", "must be positive");
  if (params.mu && !(*params.mu > 0)) throw ConfigError("mu", "reduced mass must be positive");

  DerivedParams d;
  d.nu = params.omega_e / params.omega_chi;
  d.n_real = d.nu / Rational(2) - Rational(1, 2);
  if (d.n_real < Rational(0)) {
    throw ConfigError("omega_e", "omega_e/(2 omega_chi) - 1/2 = " + d.n_real.str() +
                                     " < 0, no bound state");
  }
  d.n_max = d.n_real.floor();
  d.delta_N = d.n_real - Rational(d.n_max);
  d.D_exact = params.omega_e * params.omega_e / (Rational(4) * params.omega_chi);
  d.D = d.D_exact.to_double();
  return d;
}

Rational energy_exact(const MorseParams& params, const Rational& n) {
  const Rational m = n + Rational(1, 2);
  return params.omega_e * m - params.omega_chi * m * m;
}

double energy_level(const MorseParams& params, const DerivedParams& derived, std::int64_t n) {
  check_bound(derived, n, 0, "energy_level (unbound state)");
  return energy_exact(params, Rational(n)).to_double();
}

Rational beat_gap_exact(const MorseParams& params, std::int64_t n) {
  return params.omega_e - Rational(2) * params.omega_chi * Rational(n);
}

double beat_gap(const MorseParams& params, const DerivedParams& derived, std::int64_t n) {
  check_bound(derived, n, 1, "beat_gap");
  return beat_gap_exact(params, n).to_double();
}

RevivalTimes revival_times(const MorseParams& params, const DerivedParams& derived) {
  RevivalTimes t;
  t.ratio = derived.delta_N + Rational(1, 2);
  t.N = t.ratio.num();
  t.M = t.ratio.den();
  // pi/omega with omega = 2 pi c w gives 1/(2 c w).
  t.T_min_rev = 1.0 / (2.0 * kSpeedOfLightCmPerPs * params.omega_chi.to_double());
  t.T_max_beat = t.T_min_rev / t.ratio.to_double();
  t.T_rev = static_cast<double>(t.M) * t.T_min_rev;
  return t;
}

double t_approx(const MorseParams& params) {
  if (params.omega_chi <= Rational(0)) throw ConfigError("omega_chi", "must be positive");
  return 1.0 / (kSpeedOfLightCmPerPs * params.omega_chi.to_double());
}

}  // namespace morse
