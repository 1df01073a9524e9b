#include "erdos/interval_set.hpp"

#include <algorithm>

#include "erdos/errors.hpp"

namespace erdos {

IntervalSet IntervalSet::normalized(std::vector<Interval> raw) {
  for (const Interval& iv : raw) {
    if (iv.lo > iv.hi)
      throw Error(ErrorCode::MalformedInterval,
                  "[" + rat_str(iv.lo) + ", " + rat_str(iv.hi) + "]");
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  IntervalSet out;
  for (Interval& iv : raw) {
    if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
      if (iv.hi > out.parts_.back().hi) out.parts_.back().hi = std::move(iv.hi);
    } else {
      out.parts_.push_back(std::move(iv));
    }
  }
  return out;
}

IntervalSet IntervalSet::single(const Rational& lo, const Rational& hi) {
  return normalized({Interval{lo, hi}});
}

IntervalSet IntervalSet::point(const Rational& x) { return single(x, x); }

Rational IntervalSet::measure() const {
  Rational total(0);
  for (const Interval& iv : parts_) total += iv.hi - iv.lo;
  return total;
}

const Rational& IntervalSet::min() const {
  if (parts_.empty()) throw Error(ErrorCode::EmptyWindow, "min of empty interval set");
  return parts_.front().lo;
}

const Rational& IntervalSet::max() const {
  if (parts_.empty()) throw Error(ErrorCode::EmptyWindow, "max of empty interval set");
  return parts_.back().hi;
}

IntervalSet IntervalSet::affine(const Rational& alpha, const Rational& beta) const {
  if (beta == 0) throw Error(ErrorCode::ZeroScale, "affine_image with beta = 0");
  IntervalSet out;
  out.parts_.reserve(parts_.size());
  if (beta > 0) {
    for (const Interval& iv : parts_)
      out.parts_.push_back({alpha + beta * iv.lo, alpha + beta * iv.hi});
  } else {
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
      out.parts_.push_back({alpha + beta * it->hi, alpha + beta * it->lo});
  }
  return out;
}

IntervalSet IntervalSet::translated(const Rational& shift) const {
  return affine(shift, Rational(1));
}

bool IntervalSet::contains_point(const Rational& x) const {
  // first component with hi >= x
  auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                             [](const Interval& iv, const Rational& v) { return iv.hi < v; });
  return it != parts_.end() && it->lo <= x;
}

bool IntervalSet::contains(const IntervalSet& other) const {
  return set_subtract(other, *this).empty();
}

IntervalSet IntervalSet::clipped(const Rational& lo, const Rational& hi) const {
  return set_intersect(*this, IntervalSet::single(lo, hi));
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> raw = a.parts();
  raw.insert(raw.end(), b.parts().begin(), b.parts().end());
  return IntervalSet::normalized(std::move(raw));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> raw;
  std::size_t i = 0, j = 0;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  while (i < pa.size() && j < pb.size()) {
    const Rational& lo = rat_max(pa[i].lo, pb[j].lo);
    const Rational& hi = rat_min(pa[i].hi, pb[j].hi);
    if (lo <= hi) raw.push_back({lo, hi});
    if (pa[i].hi < pb[j].hi) ++i; else ++j;
  }
  return IntervalSet::normalized(std::move(raw));
}

IntervalSet set_subtract(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> raw;
  const auto& pb = b.parts();
  for (const Interval& iv : a.parts()) {
    if (iv.lo == iv.hi) {
      if (!b.contains_point(iv.lo)) raw.push_back(iv);
      continue;
    }
    // walk the components of b overlapping [iv.lo, iv.hi]; keep closures of
    // the positive-length remainders only
    Rational cursor = iv.lo;
    auto it = std::lower_bound(pb.begin(), pb.end(), iv.lo,
                               [](const Interval& c, const Rational& v) { return c.hi < v; });
    for (; it != pb.end() && it->lo <= iv.hi; ++it) {
      if (it->lo > cursor) raw.push_back({cursor, rat_min(it->lo, iv.hi)});
      if (it->hi > cursor) cursor = rat_min(it->hi, iv.hi);
    }
    if (cursor < iv.hi) raw.push_back({cursor, iv.hi});
  }
  return IntervalSet::normalized(std::move(raw));
}

IntervalSet boolean_ops(const IntervalSet& a, const IntervalSet& b, BoolOp op) {
  switch (op) {
    case BoolOp::Union: return set_union(a, b);
    case BoolOp::Intersect: return set_intersect(a, b);
    case BoolOp::Subtract: return set_subtract(a, b);
  }
  throw Error(ErrorCode::BadParams, "unknown boolean op");
}

}  // namespace erdos
