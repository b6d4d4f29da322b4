#pragma once

#include <span>
#include <string>
#include <vector>

#include "cohere/rational.hpp"

namespace cohere {

/// Interval with rational endpoints and per-endpoint openness.
/// A degenerate interval (lo = hi) is always closed.
class Interval {
 public:
  /// Throws std::invalid_argument when lo > hi or a degenerate interval is
  /// marked open.
  Interval(Rational lo, Rational hi, bool lo_open = false, bool hi_open = false);

  static Interval point(const Rational& value) { return Interval(value, value); }
  static Interval closed(Rational lo, Rational hi) { return Interval(std::move(lo), std::move(hi)); }
  static Interval unit() { return Interval(0, 1); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }

  bool is_point() const { return lo_ == hi_; }
  bool is_closed() const { return !lo_open_ && !hi_open_; }
  bool contains(const Rational& x) const;
  /// Every point of `other` lies in this interval.
  bool contains(const Interval& other) const;
  Interval closure() const { return Interval(lo_, hi_); }

  /// `[a, b]`, `]a, b]`, `{a}` ...
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
  bool lo_open_;
  bool hi_open_;
};

/// Product of intervals aligned with a family of conditional events.
using Box = std::vector<Interval>;

/// Precise assessment: one value in [0,1] per member of a family.
using PreciseAssessment = std::vector<Rational>;

Box closure(const Box& box);
bool is_closed(const Box& box);
bool contains(const Box& box, std::span<const Rational> point);
Box point_box(std::span<const Rational> point);
/// Throws std::invalid_argument unless every endpoint lies in [0,1].
void require_unit_box(const Box& box);
void require_unit_point(std::span<const Rational> point);

std::string to_string(std::span<const Rational> point);

}  // namespace cohere
