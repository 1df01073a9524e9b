#include "erdos/bush.hpp"

#include <algorithm>

#include "erdos/errors.hpp"

namespace erdos {

void Rect::validate() const {
  if (a_lo > a_hi) throw Error(ErrorCode::BadParams, "rect needs a_lo <= a_hi");
  if (!(b_lo > 0) || b_lo > b_hi)
    throw Error(ErrorCode::BadParams, "rect needs 0 < b_lo <= b_hi");
}

Json Rect::to_json() const {
  Json j = Json::object();
  j["a_lo"] = rat_str(a_lo);
  j["a_hi"] = rat_str(a_hi);
  j["b_lo"] = rat_str(b_lo);
  j["b_hi"] = rat_str(b_hi);
  return j;
}

Rect Rect::from_json(const Json& j) {
  Rect r{parse_rational(j.at("a_lo").get<std::string>()),
         parse_rational(j.at("a_hi").get<std::string>()),
         parse_rational(j.at("b_lo").get<std::string>()),
         parse_rational(j.at("b_hi").get<std::string>())};
  r.validate();
  return r;
}

Rational TrapCell::area() const {
  return (b2 - b1) * (width_at(b1) + width_at(b2)) / 2;
}

Rational TrapCell::a_min() const { return rat_min(lo.at(b1), lo.at(b2)); }
Rational TrapCell::a_max() const { return rat_max(hi.at(b1), hi.at(b2)); }

Json TrapCell::to_json() const {
  Json j = Json::object();
  j["b1"] = rat_str(b1);
  j["b2"] = rat_str(b2);
  j["lo"] = Json::array({rat_str(lo.c), rat_str(lo.s)});
  j["hi"] = Json::array({rat_str(hi.c), rat_str(hi.s)});
  return j;
}

UncoveredComplex UncoveredComplex::full(const Rect& rect) {
  UncoveredComplex complex;
  if (rect.a_lo < rect.a_hi && rect.b_lo <= rect.b_hi)
    complex.cells_.push_back(
        {rect.b_lo, rect.b_hi, {rect.a_lo, Rational(0)}, {rect.a_hi, Rational(0)}});
  return complex;
}

void UncoveredComplex::subtract_point_strips(const Rational& y, const IntervalSet& set) {
  if (cells_.empty()) return;
  const auto& comps = set.parts();
  std::vector<TrapCell> next;
  next.reserve(cells_.size());
  std::vector<Rational> crits;

  for (const TrapCell& cell : cells_) {
    // shifted frame: a' = a + b*y turns every strip of this point into the
    // constant band [g_lo, g_hi]; the cell window becomes
    LinearFn wlo{cell.lo.c, cell.lo.s + y};
    LinearFn whi{cell.hi.c, cell.hi.s + y};
    Rational r1 = rat_min(wlo.at(cell.b1), wlo.at(cell.b2));
    Rational r2 = rat_max(whi.at(cell.b1), whi.at(cell.b2));

    // complement gaps of `set` overlapping [r1, r2], with finite sentinels
    // strictly outside the window range so they never bind
    std::vector<std::pair<Rational, Rational>> gaps;
    if (comps.empty()) {
      gaps.emplace_back(r1 - 1, r2 + 1);
    } else {
      auto it = std::lower_bound(
          comps.begin(), comps.end(), r1,
          [](const Interval& c, const Rational& v) { return c.hi < v; });
      Rational left = it == comps.begin() ? r1 - 1 : (it - 1)->hi;
      for (; it != comps.end() && it->lo <= r2; ++it) {
        gaps.emplace_back(left, it->lo);
        left = it->hi;
      }
      gaps.emplace_back(left, it == comps.end() ? r2 + 1 : it->lo);
    }

    crits.clear();
    auto add_crossing = [&](const LinearFn& f, const Rational& value) {
      if (f.s == 0) return;
      Rational b = (value - f.c) / f.s;
      if (b > cell.b1 && b < cell.b2) crits.push_back(std::move(b));
    };
    for (const auto& [d, e] : gaps) {
      add_crossing(wlo, d);
      add_crossing(wlo, e);
      add_crossing(whi, d);
      add_crossing(whi, e);
    }
    std::sort(crits.begin(), crits.end());
    crits.erase(std::unique(crits.begin(), crits.end()), crits.end());
    subdivision_count_ += crits.size();

    Rational lo_b = cell.b1;
    for (std::size_t s = 0; s <= crits.size(); ++s) {
      const Rational& hi_b = s < crits.size() ? crits[s] : cell.b2;
      Rational mid = (lo_b + hi_b) / 2;
      Rational wlo_mid = wlo.at(mid), whi_mid = whi.at(mid);
      for (const auto& [d, e] : gaps) {
        // relations constant across the slab; decide at the midpoint
        const bool lo_is_window = wlo_mid >= d;
        const bool hi_is_window = whi_mid <= e;
        Rational piece_lo = lo_is_window ? wlo_mid : d;
        Rational piece_hi = hi_is_window ? whi_mid : e;
        if (piece_lo >= piece_hi) continue;
        LinearFn nlo = lo_is_window ? cell.lo : LinearFn{d, -y};
        LinearFn nhi = hi_is_window ? cell.hi : LinearFn{e, -y};
        next.push_back({lo_b, hi_b, std::move(nlo), std::move(nhi)});
      }
      lo_b = hi_b;
    }
  }
  cells_ = std::move(next);
  stitch();
}

void UncoveredComplex::subtract_layer(const BushLayer& layer) {
  for (const Rational& y : layer.pattern.points) {
    if (cells_.empty()) return;
    subtract_point_strips(y, layer.set);
  }
}

void UncoveredComplex::stitch() {
  if (cells_.empty()) return;
  std::sort(cells_.begin(), cells_.end(), [](const TrapCell& a, const TrapCell& b) {
    if (a.lo.c != b.lo.c) return a.lo.c < b.lo.c;
    if (a.lo.s != b.lo.s) return a.lo.s < b.lo.s;
    if (a.hi.c != b.hi.c) return a.hi.c < b.hi.c;
    if (a.hi.s != b.hi.s) return a.hi.s < b.hi.s;
    return a.b1 < b.b1;
  });
  std::vector<TrapCell> merged;
  merged.reserve(cells_.size());
  for (TrapCell& cell : cells_) {
    if (!merged.empty()) {
      TrapCell& prev = merged.back();
      if (prev.lo == cell.lo && prev.hi == cell.hi && prev.b2 == cell.b1) {
        prev.b2 = std::move(cell.b2);
        continue;
      }
    }
    merged.push_back(std::move(cell));
  }
  cells_ = std::move(merged);
}

void UncoveredComplex::canonical_sort() {
  std::sort(cells_.begin(), cells_.end(), [](const TrapCell& a, const TrapCell& b) {
    if (a.b1 != b.b1) return a.b1 < b.b1;
    if (a.b2 != b.b2) return a.b2 < b.b2;
    Rational ma = a.lo.at((a.b1 + a.b2) / 2);
    Rational mb = b.lo.at((b.b1 + b.b2) / 2);
    return ma < mb;
  });
}

Rational UncoveredComplex::area() const {
  Rational total(0);
  for (const TrapCell& cell : cells_) total += cell.area();
  return total;
}

IntervalSet UncoveredComplex::projection() const {
  std::vector<Interval> raw;
  raw.reserve(cells_.size());
  for (const TrapCell& cell : cells_) raw.push_back({cell.a_min(), cell.a_max()});
  return IntervalSet::normalized(std::move(raw));
}

Rational UncoveredComplex::max_deficit() const {
  if (cells_.empty()) return Rational(0);
  struct Event {
    Rational b;
    const TrapCell* cell;
    bool start;
  };
  std::vector<Event> events;
  events.reserve(cells_.size() * 2);
  for (const TrapCell& cell : cells_) {
    events.push_back({cell.b1, &cell, true});
    events.push_back({cell.b2, &cell, false});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.b != b.b) return a.b < b.b;
    return a.start < b.start;  // removals first
  });
  Rational sum_c(0), sum_s(0);
  Rational best(0);
  std::size_t i = 0;
  while (i < events.size()) {
    const Rational& v = events[i].b;
    best = rat_max(best, sum_c + sum_s * v);  // limit from below
    for (; i < events.size() && events[i].b == v; ++i) {
      const TrapCell& cell = *events[i].cell;
      Rational dc = cell.hi.c - cell.lo.c;
      Rational ds = cell.hi.s - cell.lo.s;
      if (events[i].start) { sum_c += dc; sum_s += ds; }
      else { sum_c -= dc; sum_s -= ds; }
    }
    best = rat_max(best, sum_c + sum_s * v);  // limit from above
  }
  return best;
}

std::vector<Rational> UncoveredComplex::breakpoints() const {
  std::vector<Rational> out;
  out.reserve(cells_.size() * 2);
  for (const TrapCell& cell : cells_) {
    out.push_back(cell.b1);
    out.push_back(cell.b2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool UncoveredComplex::contains_closed(const Rational& a, const Rational& b) const {
  for (const TrapCell& cell : cells_)
    if (b >= cell.b1 && b <= cell.b2 && a >= cell.lo.at(b) && a <= cell.hi.at(b)) return true;
  return false;
}

bool UncoveredComplex::contains_strict_a(const Rational& a, const Rational& b) const {
  for (const TrapCell& cell : cells_)
    if (b >= cell.b1 && b <= cell.b2 && a > cell.lo.at(b) && a < cell.hi.at(b)) return true;
  return false;
}

IntervalSet slice(const Pattern& pattern, const IntervalSet& set, const Rational& b) {
  if (b == 0) throw Error(ErrorCode::ZeroScale, "slice at b = 0");
  std::vector<Interval> raw;
  raw.reserve(pattern.points.size() * set.parts().size());
  for (const Rational& y : pattern.points) {
    Rational shift = -b * y;
    for (const Interval& iv : set.parts()) raw.push_back({iv.lo + shift, iv.hi + shift});
  }
  return IntervalSet::normalized(std::move(raw));
}

bool point_covered(const Pattern& pattern, const IntervalSet& set, const Rational& a,
                   const Rational& b) {
  for (const Rational& y : pattern.points)
    if (set.contains_point(a + b * y)) return true;
  return false;
}

namespace {

// All (y, set) strips across layers, processed small |y| first: early passes
// see many live cells, and slow-moving windows generate the fewest cuts.
std::vector<std::pair<Rational, const IntervalSet*>> flatten_layers(
    const std::vector<BushLayer>& layers) {
  std::vector<std::pair<Rational, const IntervalSet*>> strips;
  for (const BushLayer& layer : layers) {
    layer.pattern.validate();
    for (const Rational& y : layer.pattern.points) strips.emplace_back(y, &layer.set);
  }
  std::sort(strips.begin(), strips.end(),
            [](const auto& a, const auto& b) {
              Rational aa = rat_abs(a.first), ab = rat_abs(b.first);
              if (aa != ab) return aa < ab;
              return a.first < b.first;
            });
  return strips;
}

// Degenerate rectangles have no interior; fall back to one-dimensional
// exact sweeps so the verdict stays pointwise-exact.
CoverageReport degenerate_report(const std::vector<BushLayer>& layers, const Rect& rect) {
  CoverageReport report;
  report.covered_area = Rational(0);
  if (rect.b_lo == rect.b_hi) {
    IntervalSet target = IntervalSet::single(rect.a_lo, rect.a_hi);
    IntervalSet covered;
    for (const BushLayer& layer : layers)
      covered = set_union(covered, slice(layer.pattern, layer.set, rect.b_lo));
    IntervalSet uncovered = set_subtract(target, covered);
    report.covered = uncovered.empty();
    for (const Interval& iv : uncovered.parts())
      report.uncovered_cells.push_back(
          {rect.b_lo, rect.b_hi, {iv.lo, Rational(0)}, {iv.hi, Rational(0)}});
    report.projection_S = uncovered;
    report.max_slice_deficit = uncovered.measure();
    return report;
  }
  // a_lo == a_hi: collect the covered b-set for the single a value
  const Rational& a = rect.a_lo;
  std::vector<Interval> covered_b;
  for (const BushLayer& layer : layers) {
    for (const Rational& y : layer.pattern.points) {
      for (const Interval& iv : layer.set.parts()) {
        if (y == 0) {
          if (a >= iv.lo && a <= iv.hi) covered_b.push_back({rect.b_lo, rect.b_hi});
          continue;
        }
        Rational lo = (iv.lo - a) / y, hi = (iv.hi - a) / y;
        if (y < 0) std::swap(lo, hi);
        if (hi < rect.b_lo || lo > rect.b_hi) continue;
        covered_b.push_back({rat_max(lo, rect.b_lo), rat_min(hi, rect.b_hi)});
      }
    }
  }
  IntervalSet uncovered_b = set_subtract(IntervalSet::single(rect.b_lo, rect.b_hi),
                                         IntervalSet::normalized(std::move(covered_b)));
  report.covered = uncovered_b.empty();
  for (const Interval& iv : uncovered_b.parts())
    report.uncovered_cells.push_back({iv.lo, iv.hi, {a, Rational(0)}, {a, Rational(0)}});
  if (!uncovered_b.empty()) report.projection_S = IntervalSet::point(a);
  report.max_slice_deficit = Rational(0);
  return report;
}

}  // namespace

CoverageReport verify_cover_layers(const std::vector<BushLayer>& layers, const Rect& rect) {
  rect.validate();
  if (layers.empty()) throw Error(ErrorCode::EmptyPattern, "no layers to verify");
  for (const BushLayer& layer : layers)
    if (layer.pattern.points.empty())
      throw Error(ErrorCode::EmptyPattern, "verify_cover needs a nonempty pattern");

  if (rect.a_lo == rect.a_hi || rect.b_lo == rect.b_hi)
    return degenerate_report(layers, rect);

  UncoveredComplex complex = UncoveredComplex::full(rect);
  for (const auto& [y, set] : flatten_layers(layers)) {
    if (complex.empty()) break;
    complex.subtract_point_strips(y, *set);
  }
  complex.canonical_sort();

  CoverageReport report;
  report.covered = complex.empty();
  report.critical_b = complex.breakpoints();
  report.uncovered_cells = complex.cells();
  report.projection_S = complex.projection();
  report.max_slice_deficit = complex.max_deficit();
  report.uncovered_area = complex.area();
  report.covered_area = rect.area() - report.uncovered_area;
  return report;
}

CoverageReport verify_cover(const Pattern& pattern, const IntervalSet& set, const Rect& rect) {
  return verify_cover_layers({BushLayer{pattern, set}}, rect);
}

IntervalSet uncovered_projection(const Pattern& pattern, const IntervalSet& set,
                                 const Rect& rect) {
  return verify_cover(pattern, set, rect).projection_S;
}

Rational covered_area(const Pattern& pattern, const IntervalSet& set, const Rect& rect) {
  return verify_cover(pattern, set, rect).covered_area;
}

Json CoverageReport::to_json(bool full_cells) const {
  Json j = Json::object();
  j["covered"] = covered;
  j["uncovered_cell_count"] = uncovered_cells.size();
  j["critical_b_count"] = critical_b.size();
  j["max_slice_deficit"] = rat_str(max_slice_deficit);
  j["uncovered_area"] = rat_str(uncovered_area);
  j["covered_area"] = rat_str(covered_area);
  Json proj = Json::array();
  for (const Interval& iv : projection_S.parts())
    proj.push_back(Json::array({rat_str(iv.lo), rat_str(iv.hi)}));
  j["projection"] = proj;
  if (full_cells) {
    Json cells = Json::array();
    for (const TrapCell& cell : uncovered_cells) cells.push_back(cell.to_json());
    j["uncovered_cells"] = cells;
    Json crit = Json::array();
    for (const Rational& b : critical_b) crit.push_back(rat_str(b));
    j["critical_b"] = crit;
  }
  return j;
}

}  // namespace erdos
