#pragma once

#include <vector>

#include "erdos/bush.hpp"
#include "erdos/interval_set.hpp"
#include "erdos/pattern.hpp"
#include "erdos/rng.hpp"

namespace erdos::testing {

// Seeded helpers for property tests; everything rational and reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t u64() { return rng_.next(); }
  long pick(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long num_range = 12, long max_den = 8) {
    long den = pick(1, max_den);
    long num = pick(-num_range * den, num_range * den);
    return make_rational(num, den);
  }

  Rational positive_rational(long num_range = 12, long max_den = 8) {
    long den = pick(1, max_den);
    long num = pick(1, num_range * den);
    return make_rational(num, den);
  }

  IntervalSet interval_set(int max_components = 4, long num_range = 12, long max_den = 8) {
    std::vector<Interval> raw;
    int n = static_cast<int>(pick(0, max_components));
    for (int i = 0; i < n; ++i) {
      Rational a = rational(num_range, max_den);
      Rational b = rational(num_range, max_den);
      if (a > b) std::swap(a, b);
      raw.push_back({a, b});
    }
    return IntervalSet::normalized(std::move(raw));
  }

  Pattern pattern(int min_k, int max_k, long num_range = 8, long max_den = 8) {
    while (true) {
      std::vector<Rational> pts;
      int k = static_cast<int>(pick(min_k, max_k));
      for (int i = 0; i < k; ++i) pts.push_back(rational(num_range, max_den));
      std::sort(pts.begin(), pts.end(), std::greater<Rational>());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if (static_cast<int>(pts.size()) >= min_k)
        return make_pattern(pts, Family::Custom, Json::object(), 0);
    }
  }

  // strictly decreasing points inside [0, 1], k >= 2
  Pattern pattern_unit(int min_k, int max_k, long den = 64) {
    while (true) {
      std::vector<Rational> pts;
      int k = static_cast<int>(pick(min_k, max_k));
      for (int i = 0; i < k; ++i) pts.push_back(make_rational(pick(0, den), den));
      std::sort(pts.begin(), pts.end(), std::greater<Rational>());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if (static_cast<int>(pts.size()) >= min_k)
        return make_pattern(pts, Family::Custom, Json::object(), 0);
    }
  }

 private:
  SplitMix64 rng_;
};

// Oracle: membership of sample points on an (na x nb) rational grid over the
// rectangle agrees with the uncovered complex of the verifier.
inline bool grid_agrees(const Pattern& Y, const IntervalSet& G, const Rect& R,
                        const CoverageReport& report, int na = 101, int nb = 101) {
  UncoveredComplex complex;  // rebuild a queryable complex from the report cells
  // report cells are already the final complex; query them directly
  auto in_closed = [&](const Rational& a, const Rational& b) {
    for (const TrapCell& cell : report.uncovered_cells)
      if (b >= cell.b1 && b <= cell.b2 && a >= cell.lo.at(b) && a <= cell.hi.at(b)) return true;
    return false;
  };
  auto in_strict_a = [&](const Rational& a, const Rational& b) {
    for (const TrapCell& cell : report.uncovered_cells)
      if (b >= cell.b1 && b <= cell.b2 && a > cell.lo.at(b) && a < cell.hi.at(b)) return true;
    return false;
  };
  for (int i = 0; i < na; ++i) {
    Rational a = R.a_lo + R.width() * Rational(i) / Rational(na - 1);
    for (int j = 0; j < nb; ++j) {
      Rational b = R.b_lo + R.height() * Rational(j) / Rational(nb - 1);
      bool covered = point_covered(Y, G, a, b);
      if (covered && in_strict_a(a, b)) return false;
      if (!covered && !in_closed(a, b)) return false;
    }
  }
  return true;
}

}  // namespace erdos::testing
