#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "morse/eigen.hpp"
#include "morse/errors.hpp"
#include "oracles.hpp"

using morse::CoordGrid;
using morse::MorseSystem;
using morse::Rational;

namespace {
MorseSystem system_of(Rational we, Rational wc) { return MorseSystem({we, wc, std::nullopt}); }

double overlap(const morse::EigenState& a, const morse::EigenState& b, double h) {
  std::vector<double> prod(a.values.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a.values[i] * b.values[i];
  return morse::trapezoid(prod, h);
}
}  // namespace

TEST_CASE("laguerre: low orders") {
  CHECK(morse::laguerre(0, 0.5, 3.0) == 1.0);
  CHECK(morse::laguerre(0, 17.0, 0.0) == 1.0);
  CHECK(morse::laguerre(1, 0.5, 2.0) == doctest::Approx(-0.5).epsilon(1e-15));
  // Closed form (a+1)(a+2)/2 - (a+2) y + y^2/2 at a = 0.5, y = 1.
  const double a = 0.5, y = 1.0;
  const double closed = (a + 1) * (a + 2) / 2 - (a + 2) * y + y * y / 2;
  CHECK(closed == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(morse::laguerre(2, a, y) == doctest::Approx(closed).epsilon(1e-14));
}

TEST_CASE("laguerre: recurrence agrees with the explicit series") {
  for (int k = 0; k <= 10; ++k) {
    for (double a : {0.5, 3.5, 16.0}) {
      for (double y = 0.0; y <= 40.0; y += 0.25) {
        const double rec = morse::laguerre(k, a, y);
        const double ser = oracle::laguerre_series(k, a, y);
        const double scale = oracle::laguerre_series_scale(k, a, y);
        CHECK(std::fabs(rec - ser) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("eigenfunction: normalization, orthogonality and nodes on a fixed grid") {
  const MorseSystem s = system_of(18, 1);
  const CoordGrid grid{-2.0, 8.0, 2001};
  const double h = grid.spacing();
  const auto phi0 = morse::eigenfunction(s, 0, grid);
  const auto phi1 = morse::eigenfunction(s, 1, grid);
  CHECK(overlap(phi0, phi0, h) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::fabs(overlap(phi0, phi1, h)) < 1e-6);
  CHECK(phi0.s == 8.5);
  CHECK(phi0.energy == 8.75);

  const auto phi5 = morse::eigenfunction(s, 5, grid);
  CHECK(oracle::sign_changes(phi5.values) == 5);
}

TEST_CASE("eigenfunction: sign convention is positive on the outer tail") {
  const MorseSystem s = system_of(18, 1);
  const CoordGrid grid = morse::suggest_grid(s);
  for (std::int64_t n = 0; n <= s.derived.n_max; ++n) {
    const auto st = morse::eigenfunction(s, n, grid);
    CHECK(st.values.back() > 0.0);
  }
}

TEST_CASE("eigenfunction: errors") {
  const MorseSystem s17 = system_of(17, 1);
  const CoordGrid grid{-2.0, 8.0, 101};
  // delta_N = 0: the top state has nu - 2n - 1 = 0.
  CHECK_FALSE(morse::normalizable(s17.derived, 8));
  CHECK(morse::normalizable(s17.derived, 7));
  CHECK(morse::spatial_state_count(s17.derived) == 8);
  CHECK_THROWS_AS(morse::eigenfunction(s17, 8, grid), morse::ConfigError);
  CHECK_THROWS_AS(morse::eigenfunction(s17, 9, grid), morse::ConfigError);
  CHECK_THROWS_AS(morse::eigenfunction(s17, 0, CoordGrid{1.0, 0.0, 10}), morse::ConfigError);

  // Large nu stays finite through log-gamma where Gamma(nu - n) alone would
  // overflow.
  const MorseSystem big = system_of(1000, 1);
  const CoordGrid near_min{-0.2, 0.3, 201};
  const auto st = morse::eigenfunction(big, 3, near_min);
  for (double v : st.values) CHECK(std::isfinite(v));
  CHECK(std::tgamma(1000.0 - 3.0) == HUGE_VAL);

  // Far inside the wall the Laguerre factor itself leaves the double range.
  CHECK_THROWS_AS(morse::eigenfunction(big, 400, CoordGrid{-12.0, -11.0, 11}),
                  morse::NumericError);
}

TEST_CASE("suggest_grid covers the turning points and resolves the tails") {
  const MorseSystem s18 = system_of(18, 1);
  const MorseSystem s42 = system_of(42, 1);
  const CoordGrid g18 = morse::suggest_grid(s18);
  const CoordGrid g42 = morse::suggest_grid(s42);
  CHECK(g18.n_points == 1024);

  const double r = std::sqrt(s18.energy(8) / s18.derived.D);
  CHECK(g18.q_min < -std::log1p(r));
  CHECK(g18.q_max > -std::log1p(-r));
  CHECK(g42.q_max > g18.q_max);

  for (const auto* s : {&s18, &s42}) {
    const CoordGrid g = morse::suggest_grid(*s);
    const auto top = morse::eigenfunction(*s, s->derived.n_max, g);
    double peak = 0;
    for (double v : top.values) peak = std::max(peak, v * v);
    CHECK(top.values.back() * top.values.back() / peak < 1e-8);
    CHECK(top.values.front() * top.values.front() / peak < 1e-8);
  }
}

TEST_CASE("suggest_grid with delta_N = 0 sizes the grid by the highest normalizable state") {
  const MorseSystem s17 = system_of(17, 1);
  const CoordGrid g = morse::suggest_grid(s17);
  const auto basis = morse::eigenbasis(s17, g);
  CHECK(basis.size() == 8);
  CHECK(overlap(basis.back(), basis.back(), g.spacing()) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("invariants over the suggested grid: normalization, orthogonality, nodes") {
  for (const auto& s : {system_of(18, 1), system_of(Rational(52, 3), 1), system_of(42, 1)}) {
    const CoordGrid g = morse::suggest_grid(s);
    const auto basis = morse::eigenbasis(s, g);
    const double h = g.spacing();
    for (std::size_t m = 0; m < basis.size(); ++m) {
      CHECK(overlap(basis[m], basis[m], h) == doctest::Approx(1.0).epsilon(1e-6));
      CHECK(oracle::sign_changes(basis[m].values) == static_cast<int>(m));
      for (std::size_t n = m + 1; n < basis.size(); ++n) {
        CHECK(std::fabs(overlap(basis[m], basis[n], h)) < 1e-6);
      }
    }
  }
}

TEST_CASE("finite-difference Rayleigh quotients reproduce the analytic levels") {
  const MorseSystem s = system_of(18, 1);
  CoordGrid g = morse::suggest_grid(s);
  g.n_points = 4096;
  for (const auto& st : morse::eigenbasis(s, g)) {
    const double e = oracle::rayleigh_fd(st.values, g.q_min, g.spacing(), 1.0, s.derived.D);
    CHECK(e == doctest::Approx(st.energy).epsilon(1e-3));
  }
}
