#pragma once

#include <vector>

#include "erdos/interval_set.hpp"
#include "erdos/pattern.hpp"

namespace erdos {

// Axis-aligned target rectangle in the (translation, scale) plane,
// restricted to the positive-scale strip.
struct Rect {
  Rational a_lo, a_hi, b_lo, b_hi;

  void validate() const;  // a_lo <= a_hi, 0 < b_lo <= b_hi
  Rational width() const { return a_hi - a_lo; }
  Rational height() const { return b_hi - b_lo; }
  Rational area() const { return width() * height(); }
  Json to_json() const;
  static Rect from_json(const Json& j);
};

// value(b) = c + s * b
struct LinearFn {
  Rational c, s;
  Rational at(const Rational& b) const { return c + s * b; }
  bool operator==(const LinearFn& other) const = default;
};

// {(a, b) : b1 <= b <= b2, lo(b) <= a <= hi(b)}; lo < hi on the open slab.
struct TrapCell {
  Rational b1, b2;
  LinearFn lo, hi;

  Rational width_at(const Rational& b) const { return hi.at(b) - lo.at(b); }
  Rational area() const;
  Rational a_min() const;  // hull over [b1, b2]
  Rational a_max() const;
  Json to_json() const;
};

// One family of oblique strips: L_{pattern}(set).
struct BushLayer {
  Pattern pattern;
  IntervalSet set;
};

// Exact uncovered region of a rectangle under a union of bushes, maintained
// as a disjoint complex of trapezoids whose edges are pieces of the strip
// boundary lines a = g - b*y. Only positive-area cells are kept; the true
// uncovered set is open, so emptiness of the complex is the exact verdict.
class UncoveredComplex {
 public:
  static UncoveredComplex full(const Rect& rect);

  // Removes the strips {(a,b) : a + b*y in set} for one pattern point.
  void subtract_point_strips(const Rational& y, const IntervalSet& set);
  void subtract_layer(const BushLayer& layer);

  bool empty() const { return cells_.empty(); }
  const std::vector<TrapCell>& cells() const { return cells_; }
  Rational area() const;
  IntervalSet projection() const;  // closure of the a-projection
  Rational max_deficit() const;    // max over b of the uncovered slice width
  // Sorted b values where the final complex changes combinatorics.
  std::vector<Rational> breakpoints() const;
  std::size_t subdivision_count() const { return subdivision_count_; }

  bool contains_closed(const Rational& a, const Rational& b) const;
  // Strict in a, closed in b; covered points never satisfy this.
  bool contains_strict_a(const Rational& a, const Rational& b) const;

  void canonical_sort();

 private:
  std::vector<TrapCell> cells_;
  std::size_t subdivision_count_ = 0;
  void stitch();
};

struct CoverageReport {
  bool covered = false;
  std::vector<Rational> critical_b;      // breakpoints of the uncovered complex
  std::vector<TrapCell> uncovered_cells;
  IntervalSet projection_S;
  Rational max_slice_deficit{0};
  Rational uncovered_area{0};
  Rational covered_area{0};

  Json to_json(bool full_cells = false) const;
};

// The b-slice of the bush: union over pattern points of set - b*y.
// Throws ZeroScale when b = 0.
IntervalSet slice(const Pattern& pattern, const IntervalSet& set, const Rational& b);

CoverageReport verify_cover(const Pattern& pattern, const IntervalSet& set, const Rect& rect);
CoverageReport verify_cover_layers(const std::vector<BushLayer>& layers, const Rect& rect);

IntervalSet uncovered_projection(const Pattern& pattern, const IntervalSet& set, const Rect& rect);
Rational covered_area(const Pattern& pattern, const IntervalSet& set, const Rect& rect);

// a in slice(pattern, set, b) — the pointwise membership oracle.
bool point_covered(const Pattern& pattern, const IntervalSet& set, const Rational& a,
                   const Rational& b);

}  // namespace erdos
