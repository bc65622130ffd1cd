#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "morse/eigen.hpp"
#include "morse/fraction.hpp"
#include "morse/model.hpp"

namespace morse {

using Complex = std::complex<double>;

// n_steps samples from t_min to t_max inclusive (ps). A single-sample grid
// holds only t_min.
struct TimeGrid {
  double t_min = 0;
  double t_max = 1;
  std::int64_t n_steps = 2;

  void validate() const;
  double step() const {
    return n_steps > 1 ? (t_max - t_min) / static_cast<double>(n_steps - 1) : 0.0;
  }
  double at(std::int64_t j) const { return t_min + step() * static_cast<double>(j); }
};

// exp(-i 2 pi c E t) for E in cm^-1 and t in ps. The phase is reduced to
// [0, 1) turns before the trig call so long times keep full precision.
Complex phase_factor(double energy, double t);

// Eigenbasis on a fixed grid, reused across time samples.
class PacketBasis {
 public:
  PacketBasis(const MorseSystem& system, const CoordGrid& grid);

  const CoordGrid& grid() const noexcept { return grid_; }
  const std::vector<EigenState>& states() const noexcept { return states_; }
  // True when the top bound state was left out of the spatial sum
  // (delta_N = 0, see normalizable()).
  bool top_state_excluded() const noexcept { return top_excluded_; }

  // psi(q, t) = sum_n phi_n(q) exp(-i E_n t), c_n = 1, written into out.
  void amplitude(double t, std::span<Complex> out) const;
  std::vector<Complex> amplitude(double t) const;

 private:
  CoordGrid grid_;
  std::vector<EigenState> states_;
  bool top_excluded_ = false;
};

std::vector<Complex> wavepacket(const MorseSystem& system, const CoordGrid& grid, double t);

struct WavefieldGrid {
  CoordGrid coord;
  TimeGrid time;
  std::vector<Complex> amplitude;  // row-major [time][coord]
  std::vector<double> magnitude;   // |amplitude|
  bool top_state_excluded = false;

  std::size_t cols() const { return static_cast<std::size_t>(coord.n_points); }
  std::size_t rows() const { return static_cast<std::size_t>(time.n_steps); }
  std::span<const Complex> amplitude_row(std::size_t j) const {
    return {amplitude.data() + j * cols(), cols()};
  }
  std::span<const double> magnitude_row(std::size_t j) const {
    return {magnitude.data() + j * cols(), cols()};
  }
};

struct EvolveOptions {
  std::size_t memory_budget_bytes = std::size_t{4} << 30;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Samples psi on coord x time. Rows are computed concurrently; the result
// does not depend on the thread count. Throws NumericError if the field
// would exceed the memory budget.
WavefieldGrid evolve(const MorseSystem& system, const CoordGrid& grid, const TimeGrid& tgrid,
                     const EvolveOptions& options = {});

enum class ExtremumKind { Peak, Node };

const char* to_string(ExtremumKind kind);

struct ExtremumOptions {
  int window = 5;           // half-width of the centred window, in samples
  double prominence = 0.01; // fraction of the reference magnitude
  std::optional<double> reference;  // defaults to max of the input
  // Treat the samples as one period with the last sample equal to the first,
  // so windows wrap and the endpoints can be extrema.
  bool periodic = false;
};

struct ExtremumIndex {
  std::size_t index = 0;
  ExtremumKind kind = ExtremumKind::Peak;

  friend bool operator==(const ExtremumIndex&, const ExtremumIndex&) = default;
};

// Sample j is a peak (node) when it is the strict maximum (minimum) of the
// samples within +-window and differs from the mean of the two window edge
// samples by at least prominence * reference. Non-periodic input never
// reports the first or last `window` samples.
std::vector<ExtremumIndex> extremum_detect(std::span<const double> magnitude,
                                           const ExtremumOptions& options = {});

struct Extremum {
  double t = 0;
  std::size_t index = 0;
  ExtremumKind kind = ExtremumKind::Peak;
  std::optional<farey::Fraction> matched_fraction;
};

struct AutocorrTrace {
  TimeGrid time;
  std::vector<Complex> values;
  std::vector<Extremum> extrema;
  double reference = 0;  // A(0) = number of bound states

  std::vector<double> magnitude() const;
};

// A(t) = sum_{n=0}^{n_max} exp(-i E_n t) over every bound state, including a
// delta_N = 0 top state. Extrema of |A| are filled in with reference A(0).
AutocorrTrace autocorrelation(const MorseSystem& system, const TimeGrid& tgrid,
                              ExtremumOptions options = {});

// autocorrelation() over [0, T_rev] with periodic extremum detection.
AutocorrTrace revival_scan(const MorseSystem& system, std::int64_t n_steps = 4096,
                           ExtremumOptions options = {});

// Classical turning points (q_minus, q_plus) of energy E (cm^-1); throws
// ConfigError("unbound") for E >= D and for negative E.
std::pair<double, double> turning_points(const DerivedParams& derived, double energy);

struct ClassicalOptions {
  int steps_per_harmonic_period = 4000;
  double max_relative_drift = 1e-6;  // per classical period
};

// Trajectory q(t) released at rest from the inner turning point at t = 0,
// integrated with fixed-step RK4 and sampled at tgrid (ps). Throws
// NumericError if the energy drift per period exceeds the bound.
std::vector<double> classical_trajectory(const MorseSystem& system, double energy,
                                         const TimeGrid& tgrid,
                                         const ClassicalOptions& options = {});

// Period (ps) of the classical orbit at energy E, located by integrating
// until the momentum returns through zero at the inner turning point.
double classical_period(const MorseSystem& system, double energy,
                        const ClassicalOptions& options = {});

}  // namespace morse
