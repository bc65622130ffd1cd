// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "morse/dynamics.hpp"
#include "morse/eigen.hpp"
#include "morse/farey.hpp"
#include "morse/model.hpp"
#include "oracles.hpp"

namespace {

using morse::MorseSystem;
using morse::Rational;
using morse::farey::Fraction;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

MorseSystem sys(Rational we, Rational wc) { return MorseSystem({we, wc, std::nullopt}); }

Outcome revival_table() {
  struct Row {
    Rational we;
    Rational delta;
    std::int64_t M, N;
  };
  const Row rows[] = {{18, Rational(1, 2), 1, 1},
                      {17, Rational(0), 2, 1},
                      {Rational(52, 3), Rational(1, 6), 3, 2},
                      {42, Rational(1, 2), 1, 1}};
  Outcome out;
  for (const Row& r : rows) {
    const MorseSystem s = sys(r.we, 1);
    const auto t = s.revivals();
    const std::string got = s.derived.delta_N.str() + "," + std::to_string(t.M) + "," +
                            std::to_string(t.N);
    out.detail += (out.detail.empty() ? "" : " ") + r.we.str() + "->(" + got + ")";
    if (s.derived.delta_N != r.delta || t.M != r.M || t.N != r.N) {
      out.pass = false;
      out.detail += "!";
    }
  }
  return out;
}

Outcome revival_time_42() {
  const MorseSystem s = sys(42, 1);
  const double T = s.revivals().T_rev;
  const double closed_form = 1.0 / (2.0 * 0.0299792458);
  Outcome out;
  out.detail = "T_rev = " + fmt("%.6f", T) + " ps";
  out.require(std::fabs(T - closed_form) <= 1e-12 * closed_form, "T_rev != 1/(2c)");
  out.require(std::fabs(T - 16.678) <= 1e-3 * 16.678, "not within 0.1% of 16.678 ps");
  // The quoted 16.7 ps is the value rounded to three significant figures.
  out.require(std::round(T * 10.0) / 10.0 == 16.7, "does not round to 16.7 ps");
  out.detail += ", rounds to 16.7; deviation from 16.7 itself " +
                fmt("%.3f", 100.0 * std::fabs(T - 16.7) / 16.7) + "%";
  return out;
}

Outcome state_counts() {
  Outcome out;
  const auto a = sys(18, 1).derived;
  const auto b = sys(42, 1).derived;
  out.detail = "18/1: " + std::to_string(a.state_count()) + " states, 42/1: " +
               std::to_string(b.state_count()) + " states (n_max " + std::to_string(b.n_max) + ")";
  out.require(a.state_count() == 9, "18/1 count");
  out.require(b.state_count() == 21 && b.n_max == 20, "42/1 count");
  return out;
}

Outcome full_revival() {
  const MorseSystem s = sys(42, 1);
  const double T = s.revivals().T_rev;
  const morse::CoordGrid grid = morse::suggest_grid(s);
  const morse::TimeGrid tgrid{0.0, T, 4096};
  const auto field = morse::evolve(s, grid, tgrid);
  const auto trace = morse::autocorrelation(s, tgrid);

  const auto first = field.magnitude_row(0);
  const auto last = field.magnitude_row(field.rows() - 1);
  double worst = 0;
  for (std::size_t i = 0; i < first.size(); ++i) worst = std::max(worst, std::fabs(last[i] - first[i]));
  const double a_err = std::fabs(std::abs(trace.values.back()) - 21.0);

  Outcome out;
  out.detail = std::to_string(field.rows()) + "x" + std::to_string(field.cols()) +
               " grid, ||A(T)|-21| = " + fmt("%.2e", a_err) + ", max ||psi(T)|-|psi(0)|| = " +
               fmt("%.2e", worst);
  out.require(a_err < 1e-9, "|A(T_rev)|");
  out.require(worst < 1e-9, "|psi| revival");
  return out;
}

// Local extremum of |A| near t0 by golden-section search over +-half_width.
double refine_extremum(const MorseSystem& s, double t0, double half_width, bool maximum) {
  const auto f = [&](double t) {
    const double m = std::abs(morse::autocorrelation(s, morse::TimeGrid{t, t, 1}).values[0]);
    return maximum ? -m : m;
  };
  const double g = (std::sqrt(5.0) - 1) / 2;
  double a = t0 - half_width, b = t0 + half_width;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 100; ++it) {
    if (fc < fd) {
      b = d, d = c, fd = fc, c = b - g * (b - a), fc = f(c);
    } else {
      a = c, c = d, fc = fd, d = a + g * (b - a), fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

Outcome farey_parity() {
  const MorseSystem s = sys(42, 1);
  const double T = s.revivals().T_rev;
  const auto scan = morse::revival_scan(s, 4096);
  const double dt = scan.time.step();
  const auto annotated = morse::farey::annotate_revivals(scan, T, 7);
  const auto rows = morse::farey::match_fractions(annotated, T, 7);

  Outcome out;
  std::size_t matched = 0;
  std::string misses;
  for (const auto& r : rows) {
    const bool endpoint = r.frac.num() == 0 || r.frac.num() == r.frac.den();
    const bool ok = r.observed && (endpoint || r.observed->kind == r.expected);
    if (ok) {
      ++matched;
      continue;
    }
    // Nearest extremum of any kind, and where the continuous extremum lies.
    std::string seen = "none";
    double best = INFINITY;
    for (const auto& e : scan.extrema) {
      const double off = (e.t - r.t_target) / dt;
      if (std::fabs(off) < std::fabs(best)) {
        best = off;
        seen = std::string(morse::to_string(e.kind)) + "@" + fmt("%+.0f", off);
      }
    }
    const double t_true =
        refine_extremum(s, r.t_target, 4 * dt, r.expected == morse::ExtremumKind::Peak);
    misses += " " + r.frac.str() + "[" + morse::to_string(r.expected) + " true@" +
              fmt("%+.2f", (t_true - r.t_target) / dt) + " seen " + seen + "]";
  }
  out.pass = matched == rows.size();
  out.detail = std::to_string(matched) + "/" + std::to_string(rows.size()) +
               " fractions matched (window 5, prominence 1%, offsets in steps of " +
               fmt("%.4g", dt) + " ps)";
  if (!misses.empty()) out.detail += "; unmatched:" + misses;
  return out;
}

Outcome ford_geometry() {
  using namespace morse::farey;
  std::vector<Fraction> all;
  for (std::int64_t d = 1; d <= 12; ++d) {
    for (std::int64_t n = 0; n <= d; ++n) {
      if (std::gcd(n, d) == 1) all.emplace_back(n, d);
    }
  }
  std::size_t pairs = 0, tangent_pairs = 0, rects = 0;
  double worst_corner = 0;
  Outcome out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Fraction& a = std::min(all[i], all[j]);
      const Fraction& b = std::max(all[i], all[j]);
      ++pairs;
      const auto rel = geometric_relation(a, b);
      const auto det = std::llabs(a.num() * b.den() - a.den() * b.num());
      out.require(rel != CircleRelation::Overlapping, "overlap " + a.str() + " " + b.str());
      out.require((det == 1) == (rel == CircleRelation::Tangent) && tangent(a, b) == (det == 1),
                  "tangency " + a.str() + " " + b.str());
      if (det == 1) {
        ++tangent_pairs;
        const Fraction m = mediant(a, b);
        out.require(geometric_relation(m, a) == CircleRelation::Tangent &&
                        geometric_relation(m, b) == CircleRelation::Tangent,
                    "mediant of " + a.str() + " " + b.str());
      }
    }
    const Fraction& f = all[i];
    if (f.num() == 0 || f.num() == f.den()) continue;
    ++rects;
    const ThalesRect r = thales_rect(f);
    const FordCircle c = ford_circle(f);
    for (const Point& p : r.corners) {
      worst_corner = std::max(
          worst_corner, std::fabs(std::hypot(p.x - c.center.x, p.y - c.center.y) - c.radius));
    }
  }
  out.require(worst_corner <= 1e-12, "Thales corner off circle");
  const std::string summary = std::to_string(all.size()) + " fractions, " + std::to_string(pairs) +
                              " pairs (" + std::to_string(tangent_pairs) + " tangent), " +
                              std::to_string(rects) + " rectangles, worst corner error " +
                              fmt("%.1e", worst_corner);
  out.detail = out.detail.empty() ? summary : summary + "; " + out.detail;
  return out;
}

Outcome eigen_quality() {
  const MorseSystem s = sys(18, 1);
  const morse::CoordGrid grid = morse::suggest_grid(s);
  const auto basis = morse::eigenbasis(s, grid);
  const double h = grid.spacing();
  double norm_err = 0, ortho_err = 0;
  bool nodes_ok = true;
  for (std::size_t m = 0; m < basis.size(); ++m) {
    for (std::size_t n = m; n < basis.size(); ++n) {
      std::vector<double> prod(basis[m].values.size());
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = basis[m].values[i] * basis[n].values[i];
      const double ov = morse::trapezoid(prod, h);
      if (m == n) norm_err = std::max(norm_err, std::fabs(ov - 1.0));
      else ortho_err = std::max(ortho_err, std::fabs(ov));
    }
    nodes_ok = nodes_ok && oracle::sign_changes(basis[m].values) == static_cast<int>(m);
  }

  const morse::CoordGrid fine = morse::suggest_grid(s, {.n_points = 4096});
  double rq_err = 0;
  for (const auto& st : morse::eigenbasis(s, fine)) {
    const double e = oracle::rayleigh_fd(st.values, fine.q_min, fine.spacing(),
                                         s.params.omega_chi.to_double(), s.derived.D);
    rq_err = std::max(rq_err, std::fabs(e - st.energy) / st.energy);
  }

  Outcome out;
  out.detail = std::to_string(basis.size()) + " states; norm " + fmt("%.1e", norm_err) +
               ", overlap " + fmt("%.1e", ortho_err) + ", nodes " + (nodes_ok ? "exact" : "WRONG") +
               ", Rayleigh rel " + fmt("%.1e", rq_err);
  out.require(basis.size() == 9, "state count");
  out.require(norm_err < 1e-6, "normalization");
  out.require(ortho_err < 1e-6, "orthogonality");
  out.require(nodes_ok, "node counts");
  out.require(rq_err < 1e-3, "Rayleigh quotient");
  return out;
}

Outcome semiclassical() {
  Outcome out;
  double worst = 0;
  for (const MorseSystem& s : {sys(18, 1), sys(42, 1)}) {
    const double we = s.params.omega_e.to_double();
    const double D = s.derived.D;
    for (double ratio : {0.1, 0.5, 0.9}) {
      const double expected = oracle::tau_to_ps(oracle::morse_period_tau(we, ratio * D, D));
      const double got = morse::classical_period(s, ratio * D);
      worst = std::max(worst, std::fabs(got - expected) / expected);
    }
    out.require(morse::t_approx(s.params) == 2.0 * s.revivals().T_min_rev,
                "T_approx != 2 T_min_rev for " + s.params.omega_e.str());
  }
  out.require(worst < 1e-4, "period mismatch");
  out.detail = "worst period rel error " + fmt("%.1e", worst) + ", T_approx = 2 T_min_rev " +
               (out.pass ? "bitwise" : "check failed") + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "revival-time table", 1.0, revival_table},
      {2, "revival time of 42/1", 1.0, revival_time_42},
      {3, "bound-state counts", 0.0, state_counts},
      {4, "full revival on 4096x1024", 30.0, full_revival},
      {5, "Farey parity of |A(t)| extrema", 0.0, farey_parity},
      {6, "Ford geometry, depth <= 12", 1.0, ford_geometry},
      {7, "eigenfunction quality", 0.0, eigen_quality},
      {8, "semiclassical cross-check", 0.0, semiclassical},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string timing = fmt("%.3f s", secs);
    if (c.budget_s > 0) {
      timing += fmt(" of %.0f s", c.budget_s);
      if (secs >= c.budget_s) {
        out.pass = false;
        out.detail += "; over time budget";
      }
    }
    if (!out.pass) ++failures;
    std::printf("%s  %d  %-32s (%s)  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                timing.c_str(), out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
