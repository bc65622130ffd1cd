#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "morse/dynamics.hpp"
#include "morse/fraction.hpp"
#include "morse/rational.hpp"

namespace morse::farey {

struct Point {
  double x = 0;
  double y = 0;
};

// HangBelowTop: circles tangent to y = 1 from below, the layout of the
// numerator-vs-denominator vector plot. AboveAxis: textbook Ford circles
// resting on y = 0. The two differ by y -> 1 - y.
enum class Convention { HangBelowTop, AboveAxis };

struct FordCircle {
  Fraction frac;
  Point center;
  double radius = 0;
};

// Farey sum (a.num + b.num)/(a.den + b.den), reduced. Requires a < b.
Fraction mediant(const Fraction& a, const Fraction& b);

// All irreducible fractions in [0, 1] with denominator <= max_den, ascending.
std::vector<Fraction> farey_sequence(std::int64_t max_den);

// Circle of diameter 1/den^2 touching the reference line at num/den.
FordCircle ford_circle(const Fraction& f, Convention convention = Convention::HangBelowTop);

// |a.num * b.den - a.den * b.num| == 1.
bool tangent(const Fraction& a, const Fraction& b);

enum class CircleRelation { Disjoint, Tangent, Overlapping };

// Compares the squared centre distance with the squared radius sum in exact
// rational arithmetic; independent of the unimodularity test in tangent().
CircleRelation geometric_relation(const Fraction& a, const Fraction& b);

// Contact point of two tangent circles; throws ConfigError otherwise.
Point tangent_point(const Fraction& a, const Fraction& b,
                    Convention convention = Convention::HangBelowTop);

// Stern-Brocot parents (left < f < right) whose mediant is f.
// Throws ConfigError for 0/1, 1/1 and values outside (0, 1).
std::pair<Fraction, Fraction> parents(const Fraction& f);

struct TreeEntry {
  std::int64_t depth = 0;
  Fraction frac;
  std::optional<std::pair<Fraction, Fraction>> parents;  // empty for 0/1, 1/1
};

struct FareyTree {
  std::int64_t max_depth = 0;
  std::vector<TreeEntry> entries;  // ascending by value

  std::vector<Fraction> level(std::int64_t depth) const;
};

// Builds the tree by repeated Farey sums of neighbours starting from
// {0/1, 1/1}; a sum whose reduced denominator exceeds max_depth is dropped.
FareyTree farey_tree(std::int64_t max_depth);

// Rectangle inscribed in the Ford circle of f whose diagonal is the vertical
// diameter. The side corner lies where the line from the origin through
// (num/den, 1) crosses the circle, which makes the sides den : num and lets
// the rectangle be tiled by num x den square pixels.
struct ThalesRect {
  Fraction frac;
  // top (num/den, 1), side corner on the vector line, bottom, opposite corner
  std::array<Point, 4> corners;
  std::int64_t pixel_rows = 0;  // = den
  std::int64_t pixel_cols = 0;  // = num
  double cell_size = 0;         // diameter / sqrt(num^2 + den^2)
};

// Throws ConfigError for the endpoints 0/1 and 1/1.
ThalesRect thales_rect(const Fraction& f, Convention convention = Convention::HangBelowTop);

// Tags every extremum of trace lying within tolerance of f * T_rev (plus the
// trace start) with the nearest such f from farey_sequence(max_depth).
// Tolerance defaults to one time step.
AutocorrTrace annotate_revivals(AutocorrTrace trace, double T_rev, std::int64_t max_depth,
                                std::optional<double> tolerance = std::nullopt);

// Parity rule for fractional revivals: odd depth -> peak, even depth -> node.
inline ExtremumKind expected_kind(const Fraction& f) {
  return f.den() % 2 == 1 ? ExtremumKind::Peak : ExtremumKind::Node;
}

struct FractionMatch {
  Fraction frac;
  double t_target = 0;
  ExtremumKind expected = ExtremumKind::Peak;
  std::optional<Extremum> observed;

  bool matched() const { return observed && observed->kind == expected; }
};

// One row per fraction of farey_sequence(max_depth), paired with the nearest
// extremum annotate_revivals() tagged with it.
std::vector<FractionMatch> match_fractions(const AutocorrTrace& annotated, double T_rev,
                                           std::int64_t max_depth);

}  // namespace morse::farey
