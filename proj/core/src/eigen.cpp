#include "morse/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "morse/errors.hpp"

namespace morse {

void CoordGrid::validate() const {
  if (!(n_points >= 2)) throw ConfigError("q_points", "need at least 2 grid points");
  if (!(std::isfinite(q_min) && std::isfinite(q_max) && q_min < q_max)) {
    throw ConfigError("q_min", "grid requires finite q_min < q_max");
  }
}

std::vector<double> CoordGrid::points() const {
  std::vector<double> q(static_cast<std::size_t>(n_points));
  for (std::int64_t i = 0; i < n_points; ++i) q[static_cast<std::size_t>(i)] = at(i);
  return q;
}

double laguerre(std::int64_t k, double a, double y) {
  if (k <= 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - y;
  for (std::int64_t j = 1; j < k; ++j) {
    const double jd = static_cast<double>(j);
    const double next = ((2.0 * jd + 1.0 + a - y) * cur - (jd + a) * prev) / (jd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

bool normalizable(const DerivedParams& derived, std::int64_t n) {
  return derived.nu - Rational(2 * n + 1) > Rational(0);
}

std::int64_t spatial_state_count(const DerivedParams& derived) {
  return normalizable(derived, derived.n_max) ? derived.n_max + 1 : derived.n_max;
}

EigenState eigenfunction(const MorseSystem& system, std::int64_t n, const CoordGrid& grid) {
  grid.validate();
  const DerivedParams& d = system.derived;
  if (n < 0 || n > d.n_max) {
    throw ConfigError("n", "state " + std::to_string(n) + " is not bound (n_max = " +
                               std::to_string(d.n_max) + ")");
  }
  if (!normalizable(d, n)) {
    throw ConfigError("n", "state " + std::to_string(n) +
                               " has nu - 2n - 1 <= 0 and no finite normalization");
  }

  const double nu = d.nu.to_double();
  const double two_s = nu - 2.0 * static_cast<double>(n) - 1.0;
  const double s = 0.5 * two_s;
  const double log_norm =
      0.5 * (std::log(two_s) + std::lgamma(static_cast<double>(n) + 1.0) -
             std::lgamma(nu - static_cast<double>(n)));
  constexpr double kLogMax = 709.0;

  EigenState state;
  state.n = n;
  state.energy = system.energy(n);
  state.s = s;
  state.values.resize(static_cast<std::size_t>(grid.n_points));
  for (std::int64_t i = 0; i < grid.n_points; ++i) {
    const double q = grid.at(i);
    const double log_y = std::log(nu) - q;
    const double y = std::exp(log_y);
    const double lag = laguerre(n, two_s, y);
    const double log_prefactor = -0.5 * y + s * log_y + log_norm;
    if (!std::isfinite(lag) ||
        (lag != 0.0 && log_prefactor + std::log(std::fabs(lag)) > kLogMax)) {
      throw NumericError("eigenfunction n=" + std::to_string(n) + " overflows at q=" +
                         std::to_string(q));
    }
    state.values[static_cast<std::size_t>(i)] = std::exp(log_prefactor) * lag;
  }
  return state;
}

std::vector<EigenState> eigenbasis(const MorseSystem& system, const CoordGrid& grid) {
  std::vector<EigenState> basis;
  const std::int64_t count = spatial_state_count(system.derived);
  basis.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = 0; n < count; ++n) basis.push_back(eigenfunction(system, n, grid));
  return basis;
}

CoordGrid suggest_grid(const MorseSystem& system, const GridOptions& options) {
  const DerivedParams& d = system.derived;
  const std::int64_t count = spatial_state_count(d);
  if (count == 0) throw ConfigError("omega_e", "no bound state has a normalizable profile");
  const std::int64_t top = count - 1;

  const double ratio = std::sqrt(system.energy(top) / d.D);
  const double q_minus = -std::log1p(ratio);
  const double q_plus = -std::log1p(-ratio);
  const double s = 0.5 * (d.nu.to_double() - 2.0 * static_cast<double>(top) - 1.0);
  const double outer_step = 1.0 / s;

  CoordGrid grid{q_minus - options.inner_margin, q_plus + options.decay_lengths * outer_step,
                 options.n_points};
  for (int iter = 0; iter < 1000; ++iter) {
    const EigenState st = eigenfunction(system, top, grid);
    double peak = 0;
    for (double v : st.values) peak = std::max(peak, v * v);
    const double lo = st.values.front() * st.values.front();
    const double hi = st.values.back() * st.values.back();
    const bool lo_ok = lo < options.tail_ratio * peak;
    const bool hi_ok = hi < options.tail_ratio * peak;
    if (lo_ok && hi_ok) return grid;
    if (!lo_ok) grid.q_min -= 0.5;
    if (!hi_ok) grid.q_max += outer_step;
  }
  throw NumericError("suggest_grid: tail criterion not met");
}

double trapezoid(std::span<const double> values, double h) {
  if (values.size() < 2) return 0.0;
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * h;
}

}  // namespace morse
