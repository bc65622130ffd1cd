#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "morse/model.hpp"

namespace morse {

// Uniform grid in the dimensionless coordinate q = alpha * x.
struct CoordGrid {
  double q_min = -2.0;
  double q_max = 8.0;
  std::int64_t n_points = 1024;

  // Throws ConfigError unless q_min < q_max and n_points >= 2.
  void validate() const;
  double spacing() const { return (q_max - q_min) / static_cast<double>(n_points - 1); }
  double at(std::int64_t i) const { return q_min + spacing() * static_cast<double>(i); }
  std::vector<double> points() const;
};

struct EigenState {
  std::int64_t n = 0;
  double energy = 0;  // cm^-1
  double s = 0;       // Laguerre order is 2s
  std::vector<double> values;
};

// Generalized Laguerre polynomial L_k^a(y) by upward three-term recurrence.
double laguerre(std::int64_t k, double a, double y);

// True when nu - 2n - 1 > 0, i.e. phi_n has a finite normalization. Fails
// only for the top state of a system with delta_N = 0.
bool normalizable(const DerivedParams& derived, std::int64_t n);

// Number of states 0..k-1 with a well-defined spatial profile.
std::int64_t spatial_state_count(const DerivedParams& derived);

// Analytic Morse eigenfunction phi_n sampled on grid, unit-normalized in q.
//
// The normalization sqrt((nu-2n-1) n! / Gamma(nu-n)) and the prefactor
// exp(-y/2) y^s are combined in log space, so large nu does not overflow
// Gamma. Throws ConfigError for unbound or non-normalizable n and
// NumericError if a sample exceeds the double range.
EigenState eigenfunction(const MorseSystem& system, std::int64_t n, const CoordGrid& grid);

// All spatially defined eigenstates 0..spatial_state_count()-1.
std::vector<EigenState> eigenbasis(const MorseSystem& system, const CoordGrid& grid);

struct GridOptions {
  std::int64_t n_points = 1024;
  double inner_margin = 1.0;   // added below the inner turning point
  double decay_lengths = 4.0;  // initial outer margin in units of 1/s
  double tail_ratio = 1e-8;    // |phi|^2 at each end relative to its peak
};

// Grid covering both turning points of the highest spatial state, widened
// until that state's density at either end falls below tail_ratio of peak.
CoordGrid suggest_grid(const MorseSystem& system, const GridOptions& options = {});

// Trapezoidal rule for uniformly spaced samples.
double trapezoid(std::span<const double> values, double h);

// Morse potential D (1 - e^{-q})^2 in cm^-1.
inline double potential(const DerivedParams& derived, double q) {
  const double u = 1.0 - std::exp(-q);
  return derived.D * u * u;
}

}  // namespace morse
