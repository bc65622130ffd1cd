#include "morse/farey.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "morse/errors.hpp"

namespace morse::farey {
namespace {

Point to_convention(Point p, Convention convention) {
  if (convention == Convention::AboveAxis) p.y = 1.0 - p.y;
  return p;
}

// 1/(2 den^2), the radius.
Rational exact_radius(const Fraction& f) { return Rational(1, 2 * f.den() * f.den()); }

}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw ConfigError("fraction", "denominator must be positive");
  if (num < 0) throw ConfigError("fraction", "numerator must be non-negative");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction mediant(const Fraction& a, const Fraction& b) {
  if (!(a < b)) throw ConfigError("mediant", "requires a < b");
  return Fraction(a.num() + b.num(), a.den() + b.den());
}

std::vector<Fraction> farey_sequence(std::int64_t max_den) {
  if (max_den < 1) throw ConfigError("depth", "max denominator must be >= 1");
  std::vector<Fraction> seq;
  // Next-term recurrence for neighbours a/b < c/d.
  std::int64_t a = 0, b = 1, c = 1, d = max_den;
  seq.emplace_back(0, 1);
  while (c <= max_den) {
    const std::int64_t k = (max_den + b) / d;
    const std::int64_t e = k * c - a;
    const std::int64_t f = k * d - b;
    seq.emplace_back(c, d);
    a = c;
    b = d;
    c = e;
    d = f;
    if (a == 1 && b == 1) break;
  }
  return seq;
}

FordCircle ford_circle(const Fraction& f, Convention convention) {
  const double d2 = static_cast<double>(f.den()) * static_cast<double>(f.den());
  const double r = 1.0 / (2.0 * d2);
  return {f, to_convention({f.value(), 1.0 - r}, convention), r};
}

bool tangent(const Fraction& a, const Fraction& b) {
  const detail::int128 det =
      static_cast<detail::int128>(a.num()) * b.den() - static_cast<detail::int128>(a.den()) * b.num();
  return det == 1 || det == -1;
}

CircleRelation geometric_relation(const Fraction& a, const Fraction& b) {
  const Rational ra = exact_radius(a), rb = exact_radius(b);
  const Rational dx = Rational(a.num(), a.den()) - Rational(b.num(), b.den());
  const Rational dy = ra - rb;  // centres sit at 1 - r
  const Rational dist2 = dx * dx + dy * dy;
  const Rational sum = ra + rb;
  const Rational sum2 = sum * sum;
  if (dist2 > sum2) return CircleRelation::Disjoint;
  if (dist2 == sum2) return CircleRelation::Tangent;
  return CircleRelation::Overlapping;
}

Point tangent_point(const Fraction& a, const Fraction& b, Convention convention) {
  if (!tangent(a, b)) {
    throw ConfigError("tangent_point", a.str() + " and " + b.str() + " are not tangent");
  }
  const FordCircle ca = ford_circle(a), cb = ford_circle(b);
  const double k = ca.radius / (ca.radius + cb.radius);
  const Point p{ca.center.x + k * (cb.center.x - ca.center.x),
                ca.center.y + k * (cb.center.y - ca.center.y)};
  return to_convention(p, convention);
}

std::pair<Fraction, Fraction> parents(const Fraction& f) {
  if (!(Fraction(0, 1) < f && f < Fraction(1, 1))) {
    throw ConfigError("parents", f.str() + " has no Stern-Brocot parents in (0, 1)");
  }
  Fraction left(0, 1), right(1, 1);
  while (true) {
    const Fraction m = mediant(left, right);
    if (m == f) return {left, right};
    (f < m ? right : left) = m;
  }
}

std::vector<Fraction> FareyTree::level(std::int64_t depth) const {
  std::vector<Fraction> out;
  for (const TreeEntry& e : entries) {
    if (e.depth == depth) out.push_back(e.frac);
  }
  return out;
}

FareyTree farey_tree(std::int64_t max_depth) {
  if (max_depth < 1) throw ConfigError("depth", "max depth must be >= 1");
  FareyTree tree;
  tree.max_depth = max_depth;
  tree.entries = {{1, Fraction(0, 1), std::nullopt}, {1, Fraction(1, 1), std::nullopt}};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<TreeEntry> next;
    next.reserve(tree.entries.size() * 2);
    for (std::size_t i = 0; i < tree.entries.size(); ++i) {
      next.push_back(tree.entries[i]);
      if (i + 1 == tree.entries.size()) break;
      const Fraction& lo = tree.entries[i].frac;
      const Fraction& hi = tree.entries[i + 1].frac;
      // Farey sum, labelled by its reduced form.
      const Fraction sum = mediant(lo, hi);
      if (sum.den() > max_depth) continue;
      next.push_back({sum.den(), sum, std::make_pair(lo, hi)});
      grew = true;
    }
    tree.entries = std::move(next);
  }
  return tree;
}

ThalesRect thales_rect(const Fraction& f, Convention convention) {
  if (f.num() == 0 || f.num() >= f.den()) {
    throw ConfigError("thales_rect", "needs 0 < f < 1, got " + f.str());
  }
  const double n = static_cast<double>(f.num());
  const double d = static_cast<double>(f.den());
  const double diameter = 1.0 / (d * d);
  const double hyp = std::hypot(n, d);
  const double cell = diameter / hyp;

  const Point top{f.value(), 1.0};
  const Point bottom{f.value(), 1.0 - diameter};
  // Walk d cells from the top back along the unit vector (n, d)/hyp.
  const double leg = d * cell;
  const Point side{top.x - leg * n / hyp, top.y - leg * d / hyp};
  const Point opposite{top.x + bottom.x - side.x, top.y + bottom.y - side.y};

  ThalesRect rect;
  rect.frac = f;
  rect.corners = {to_convention(top, convention), to_convention(side, convention),
                  to_convention(bottom, convention), to_convention(opposite, convention)};
  rect.pixel_rows = f.den();
  rect.pixel_cols = f.num();
  rect.cell_size = cell;
  return rect;
}

AutocorrTrace annotate_revivals(AutocorrTrace trace, double T_rev, std::int64_t max_depth,
                                std::optional<double> tolerance) {
  if (!(T_rev > 0.0)) throw ConfigError("T_rev", "must be positive");
  const double tol = tolerance.value_or(trace.time.step());
  const std::vector<Fraction> fractions = farey_sequence(max_depth);
  const double t0 = trace.time.t_min;
  for (Extremum& e : trace.extrema) {
    e.matched_fraction.reset();
    double best = std::numeric_limits<double>::infinity();
    for (const Fraction& f : fractions) {
      const double dist = std::fabs(e.t - (t0 + f.value() * T_rev));
      if (dist <= tol && dist < best) {
        best = dist;
        e.matched_fraction = f;
      }
    }
  }
  return trace;
}

std::vector<FractionMatch> match_fractions(const AutocorrTrace& annotated, double T_rev,
                                           std::int64_t max_depth) {
  std::vector<FractionMatch> rows;
  const double t0 = annotated.time.t_min;
  for (const Fraction& f : farey_sequence(max_depth)) {
    FractionMatch row{f, t0 + f.value() * T_rev, expected_kind(f), std::nullopt};
    for (const Extremum& e : annotated.extrema) {
      if (e.matched_fraction != f) continue;
      if (!row.observed ||
          std::fabs(e.t - row.t_target) < std::fabs(row.observed->t - row.t_target)) {
        row.observed = e;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace morse::farey
