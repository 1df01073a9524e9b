#pragma once

#include <vector>

#include "erdos/rational.hpp"

namespace erdos {

struct Interval {
  Rational lo, hi;
  bool operator==(const Interval& other) const = default;
};

// Canonical finite union of disjoint closed rational intervals:
// sorted, hi_i < lo_{i+1}, adjacent intervals merged. Degenerate
// components (lo = hi) are allowed and carry zero measure.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Throws Error(MalformedInterval) if some raw pair has lo > hi.
  static IntervalSet normalized(std::vector<Interval> raw);
  static IntervalSet single(const Rational& lo, const Rational& hi);
  static IntervalSet point(const Rational& x);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t component_count() const { return parts_.size(); }

  Rational measure() const;
  const Rational& min() const;  // throws on empty
  const Rational& max() const;

  // alpha + beta * S; throws Error(ZeroScale) if beta = 0.
  IntervalSet affine(const Rational& alpha, const Rational& beta) const;
  IntervalSet translated(const Rational& shift) const;

  bool contains_point(const Rational& x) const;
  // Subset test for closed canonical sets (exact).
  bool contains(const IntervalSet& other) const;

  IntervalSet clipped(const Rational& lo, const Rational& hi) const;

  bool operator==(const IntervalSet& other) const = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
// Closure of the set difference a \ b (stays within closed-interval sets;
// removing interior points of zero measure does not change the result).
IntervalSet set_subtract(const IntervalSet& a, const IntervalSet& b);

enum class BoolOp { Union, Intersect, Subtract };
IntervalSet boolean_ops(const IntervalSet& a, const IntervalSet& b, BoolOp op);

}  // namespace erdos
