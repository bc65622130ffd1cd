#pragma once

#include <cstdint>
#include <optional>

#include "morse/rational.hpp"

namespace morse {

// Speed of light in cm/ps. Converts wavenumbers (cm^-1) to angular
// frequencies: omega = 2*pi*c*wavenumber.
inline constexpr double kSpeedOfLightCmPerPs = 0.0299792458;

// Spectroscopic inputs, both given as wavenumbers omega/(2*pi*c) in cm^-1.
struct MorseParams {
  Rational omega_e;
  Rational omega_chi;
  std::optional<double> mu;  // reduced mass in amu; only sets the length scale
};

struct DerivedParams {
  double D = 0;          // dissociation energy, cm^-1
  Rational D_exact;      // omega_e^2 / (4 omega_chi)
  Rational nu;           // omega_e / omega_chi
  Rational n_real;       // nu/2 - 1/2
  std::int64_t n_max = 0;
  Rational delta_N;      // fractional part of n_real, in [0, 1)

  std::int64_t state_count() const noexcept { return n_max + 1; }
};

struct RevivalTimes {
  double T_min_rev = 0;   // ps
  double T_max_beat = 0;  // ps
  double T_rev = 0;       // ps
  std::int64_t M = 0;     // T_rev = M * T_min_rev
  std::int64_t N = 0;     // T_rev = N * T_max_beat
  Rational ratio;         // T_min_rev / T_max_beat = delta_N + 1/2 = N/M
};

// Validates params and computes the exact derived quantities.
// Throws ConfigError for omega_chi <= 0, omega_e <= 0 or n_real < 0.
DerivedParams derive(const MorseParams& params);

// E_n = omega_e (n + 1/2) - omega_chi (n + 1/2)^2 in cm^-1 for a bound n.
double energy_level(const MorseParams& params, const DerivedParams& derived, std::int64_t n);

// The same quadratic evaluated exactly at an arbitrary rational n.
Rational energy_exact(const MorseParams& params, const Rational& n);

// Neighbour gap E_n - E_{n-1} = omega_e - 2 omega_chi n, for 1 <= n <= n_max.
double beat_gap(const MorseParams& params, const DerivedParams& derived, std::int64_t n);
Rational beat_gap_exact(const MorseParams& params, std::int64_t n);

RevivalTimes revival_times(const MorseParams& params, const DerivedParams& derived);

// Semiclassical revival estimate 2*pi/omega_chi, in ps.
double t_approx(const MorseParams& params);

// Converts a wavenumber period 2*pi/(2*pi*c*w) = 1/(c*w) to ps.
inline double period_ps(double wavenumber) { return 1.0 / (kSpeedOfLightCmPerPs * wavenumber); }

// Validated parameters together with their derived quantities.
struct MorseSystem {
  MorseParams params;
  DerivedParams derived;

  explicit MorseSystem(MorseParams p) : params(std::move(p)), derived(derive(params)) {}

  double energy(std::int64_t n) const { return energy_level(params, derived, n); }
  RevivalTimes revivals() const { return revival_times(params, derived); }
};

}  // namespace morse
