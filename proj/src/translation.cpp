#include "erdos/translation.hpp"

#include "erdos/errors.hpp"

namespace erdos {

namespace {

// sup over u of card(X ∩ [u, u+1]); attained with the window anchored at a point
long window_count_bound(const Pattern& X) {
  const auto& y = X.points;
  long best = 1;
  for (std::size_t j = 0; j < y.size(); ++j) {
    Rational top = y[j] + 1;
    long count = 1;
    for (std::size_t i = j; i-- > 0;)
      if (y[i] <= top) count = static_cast<long>(j - i + 1);
    best = std::max(best, count);
  }
  return best;
}

}  // namespace

Json TranslationReport::to_json() const {
  Json j = Json::object();
  j["M"] = M;
  j["window"] = Json::array({rat_str(window_u), rat_str(window_v)});
  j["lhs"] = rat_str(lhs);
  j["rhs"] = rat_str(rhs);
  Json w = Json::array();
  for (const Interval& iv : witness_set.parts())
    w.push_back(Json::array({rat_str(iv.lo), rat_str(iv.hi)}));
  j["witness_set"] = w;
  j["fraction"] = rat_str(fraction);
  j["tau"] = rat_str(tau);
  j["bound_vacuous"] = bound_vacuous;
  return j;
}

TranslationReport thm14a_check(const Pattern& X, const IntervalSet& G, const Rational& u,
                               const Rational& v) {
  X.validate();
  if (!(v > u)) throw Error(ErrorCode::EmptyWindow, "need v > u");

  TranslationReport report;
  report.M = window_count_bound(X);
  report.window_u = u;
  report.window_v = v;

  std::vector<Interval> translated;
  translated.reserve(X.k() * G.parts().size());
  for (const Rational& x : X.points)
    for (const Interval& iv : G.parts()) translated.push_back({iv.lo - x, iv.hi - x});
  IntervalSet gx = IntervalSet::normalized(std::move(translated));

  IntervalSet window = IntervalSet::single(u, v);
  report.lhs = set_intersect(gx, window).measure();
  report.witness_set = set_subtract(window, gx);
  Rational mG = G.measure();
  Rational Mr(report.M);
  report.rhs = mG * Mr * (v - u + Rational(1) / Mr);
  report.fraction = report.witness_set.measure() / (v - u);
  report.tau = Rational(1) - Mr * mG;
  report.bound_vacuous = !(report.tau > 0);
  return report;
}

}  // namespace erdos
