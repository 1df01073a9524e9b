#include "erdos/construct_rand.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "erdos/analysis.hpp"
#include "erdos/errors.hpp"
#include "erdos/rng.hpp"

namespace erdos {

namespace {

const Rect kCanonicalRect{Rational(0), Rational(1), Rational(1), Rational(2)};

Json interval_set_json(const IntervalSet& set) {
  Json arr = Json::array();
  for (const Interval& iv : set.parts())
    arr.push_back(Json::array({rat_str(iv.lo), rat_str(iv.hi)}));
  return arr;
}

Rational pattern_rel_min_gap(const Pattern& p) {
  return p.min_gap() / p.span();
}

struct Candidate {
  Pattern subset;
  long n;
  Rational delta;
  Rational lhs;
};

}  // namespace

Json SelectionResult::to_json() const {
  Json j = Json::object();
  j["n"] = n;
  j["delta"] = rat_str(delta);
  j["C_X"] = rat_str(C_X);
  j["q"] = rat_str(q);
  j["lhs"] = rat_str(lhs);
  j["rhs"] = rat_str(rhs);
  j["guaranteed"] = guaranteed;
  j["X_star"] = X_star.to_json()["points"];
  return j;
}

SelectionResult select_Xstar(const Pattern& X, const Rational& eps, bool require_guarantee) {
  X.validate();
  if (eps <= 0) throw Error(ErrorCode::BadParams, "eps > 0");
  const long k = static_cast<long>(X.k());
  if (k < 3) throw Error(ErrorCode::SelectionFailed, "need at least 3 points (n >= 3)");

  const Rational C_X = X.max_abs();
  const Rational q = eps / (3 * (1 + 4 * C_X));
  const Rational rhs = eps / 3;

  std::vector<Candidate> candidates;
  auto add_candidate = [&](Pattern subset) {
    if (subset.k() < 3) return;
    Candidate c;
    c.n = static_cast<long>(subset.k());
    c.delta = pattern_rel_min_gap(subset);
    c.lhs = 4 * (1 + C_X) * Rational(c.n) *
            rat_pow(1 - q, static_cast<unsigned long>(c.n)) / c.delta;
    c.subset = std::move(subset);
    candidates.push_back(std::move(c));
  };

  if (k <= 24) {
    for (long n = 3; n <= k; ++n) add_candidate(delta_n(X, n).witness);
  } else {
    // scalable ladder: greedy thinning at relative thresholds 1/j between the
    // extreme points, plus the full pattern
    std::vector<Rational> diffs = pairwise_differences(X);
    for (long j = 2; j < k; ++j) {
      Rational t = X.span() / Rational(j);
      std::vector<std::size_t> kept{0};
      for (std::size_t idx = 1; idx + 1 < X.k(); ++idx)
        if (X.points[kept.back()] - X.points[idx] >= t) kept.push_back(idx);
      if (X.points[kept.back()] - X.points.back() >= t)
        kept.push_back(X.k() - 1);
      else
        kept.back() = X.k() - 1;
      if (kept.size() >= 3) add_candidate(X.subset(kept));
    }
    std::vector<std::size_t> all(X.k());
    for (std::size_t i = 0; i < X.k(); ++i) all[i] = i;
    add_candidate(X.subset(all));
  }

  SelectionResult result;
  result.C_X = C_X;
  result.q = q;
  result.rhs = rhs;

  const Candidate* best_ok = nullptr;
  const Candidate* best_any = nullptr;
  for (const Candidate& c : candidates) {
    result.table.push_back(Json::object(
        {{"n", c.n}, {"delta", rat_str(c.delta)}, {"lhs", rat_str(c.lhs)}}));
    if (c.lhs <= rhs && (!best_ok || c.n < best_ok->n)) best_ok = &c;
    if (!best_any || c.lhs < best_any->lhs) best_any = &c;
  }

  if (best_ok) {
    result.X_star = best_ok->subset;
    result.n = best_ok->n;
    result.delta = best_ok->delta;
    result.lhs = best_ok->lhs;
    result.guaranteed = true;
    return result;
  }
  if (require_guarantee || !best_any) {
    std::string best_info = best_any
        ? " best lhs " + rat_str(best_any->lhs) + " at n " + std::to_string(best_any->n)
        : "";
    throw Error(ErrorCode::SelectionFailed,
                "no subset satisfies 4(1+C_X) n (1-q)^n / delta <= eps/3;" + best_info +
                    ", rhs " + rat_str(rhs));
  }
  result.X_star = best_any->subset;
  result.n = best_any->n;
  result.delta = best_any->delta;
  result.lhs = best_any->lhs;
  result.guaranteed = false;
  return result;
}

Json RandomPlan::to_json() const {
  Json j = Json::object();
  j["seed"] = seed;
  j["trial_index"] = trial_index;
  j["q"] = rat_str(q);
  j["tau"] = rat_str(tau);
  j["cell_range"] = Json::array({cell_m, cell_M});
  j["chosen_cells"] = chosen_cells;
  Json pl = Json::array();
  for (const Rational& u : placements) pl.push_back(rat_str(u));
  j["placements"] = pl;
  j["G"] = interval_set_json(G);
  j["S"] = interval_set_json(S);
  j["H"] = interval_set_json(H);
  j["measures"] = Json::object({{"G", rat_str(measure_G)},
                                {"S", rat_str(measure_S)},
                                {"H", rat_str(measure_H)}});
  j["target_bound"] = rat_str(target_bound);
  return j;
}

Json Thm15Params::to_json() const {
  Json j = Json::object();
  j["C_X"] = rat_str(C_X);
  j["eps"] = rat_str(eps);
  j["q"] = rat_str(q);
  j["n"] = n;
  j["delta"] = rat_str(delta);
  j["tau"] = rat_str(tau);
  j["A"] = rat_str(A);
  j["B"] = rat_str(B);
  j["X_star"] = X_star.to_json()["points"];
  return j;
}

namespace {

struct Thm15Trial {
  bool accepted = false;
  std::vector<long> cells;
  IntervalSet G, S;
  Rational measure_G, measure_S;
};

}  // namespace

Thm15Result thm15_similarity_cover(const Pattern& X, const Rational& eps, std::uint64_t seed,
                                   int max_trials, int threads) {
  X.validate();
  if (eps <= 0) throw Error(ErrorCode::BadParams, "eps > 0");
  if (max_trials < 1) throw Error(ErrorCode::BadParams, "max_trials >= 1");
  threads = std::max(1, threads);

  Thm15Result result;
  result.selection = select_Xstar(X, eps, /*require_guarantee=*/false);

  Thm15Params& P = result.params;
  P.C_X = result.selection.C_X;
  P.eps = eps;
  P.q = result.selection.q;
  P.n = result.selection.n;
  P.X_star = result.selection.X_star;
  P.delta = result.selection.delta;
  P.tau = P.X_star.min_gap();
  const Rational x_n = P.X_star.points.back();
  P.Y = P.X_star.translated(-x_n);
  if (x_n >= 0) { P.A = Rational(0); P.B = 1 + x_n; }
  else          { P.A = x_n;         P.B = Rational(1); }

  const Rational y1 = P.Y.points.front();
  const Rational top = P.B + 2 * y1;
  const long cell_m = static_cast<long>(mpz_get_si(rat_floor(P.A / P.tau).get_mpz_t()));
  const long cell_M = static_cast<long>(mpz_get_si(rat_floor(top / P.tau).get_mpz_t())) + 1;

  const Rect band{P.A, P.B, Rational(1), Rational(2)};

  auto run_trial = [&](long t) {
    Thm15Trial trial;
    TrialStream stream = TrialStream::make(seed, static_cast<std::uint64_t>(t));
    std::vector<Interval> raw;
    for (long j = cell_m; j < cell_M; ++j) {
      if (stream.bernoulli(P.q)) {
        trial.cells.push_back(j);
        raw.push_back({Rational(j) * P.tau, Rational(j + 1) * P.tau});
      }
    }
    trial.measure_G = Rational(static_cast<long>(trial.cells.size())) * P.tau;
    if (!(trial.measure_G < eps)) return trial;
    trial.G = IntervalSet::normalized(std::move(raw));
    CoverageReport band_report = verify_cover(P.Y, trial.G, band);
    trial.S = band_report.projection_S;
    trial.measure_S = trial.S.measure();
    if (!(trial.measure_S < eps)) return trial;
    trial.accepted = true;
    return trial;
  };

  Rational best_G(-1), best_S(-1);
  for (long wave = 0; wave < max_trials; wave += threads) {
    const long wave_end = std::min<long>(wave + threads, max_trials);
    std::vector<std::future<Thm15Trial>> futures;
    for (long t = wave; t < wave_end; ++t)
      futures.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                   run_trial, t));
    for (long t = wave; t < wave_end; ++t) {
      Thm15Trial trial = futures[static_cast<std::size_t>(t - wave)].get();
      if (best_G < 0 || trial.measure_G < best_G) best_G = trial.measure_G;
      if (trial.measure_S >= 0 && (best_S < 0 || trial.measure_S < best_S))
        best_S = trial.measure_S;
      if (!trial.accepted) continue;

      RandomPlan& plan = result.plan;
      plan.seed = seed;
      plan.trial_index = t;
      plan.q = P.q;
      plan.tau = P.tau;
      plan.cell_m = cell_m;
      plan.cell_M = cell_M;
      plan.chosen_cells = std::move(trial.cells);
      plan.G = std::move(trial.G);
      plan.S = std::move(trial.S);
      plan.H = set_union(plan.G, plan.S);
      plan.measure_G = trial.measure_G;
      plan.measure_S = trial.measure_S;
      plan.measure_H = plan.H.measure();
      plan.target_bound = eps;

      result.final_verification = verify_cover(P.X_star, plan.H, kCanonicalRect);
      if (result.final_verification.covered && plan.measure_H < 2 * eps) return result;
      // exact repair failed for this trial (should not happen; keep trying)
    }
  }
  throw Error(ErrorCode::TrialBudgetExceeded,
              "no accepted trial in " + std::to_string(max_trials) +
                  " trials; best measure(G) " + (best_G >= 0 ? rat_str(best_G) : "-") +
                  ", best measure(S) " + (best_S >= 0 ? rat_str(best_S) : "-"));
}

Thm14bResult thm14b_translation_cover(const Pattern& X, const Rational& eps,
                                      std::uint64_t seed, int max_trials, int threads) {
  X.validate();
  if (!(eps > 0) || !(eps < 1)) throw Error(ErrorCode::BadParams, "eps in (0,1)");
  if (max_trials < 1) throw Error(ErrorCode::BadParams, "max_trials >= 1");
  threads = std::max(1, threads);

  Thm14bResult result;
  result.eps = eps;

  const double eps_d = rat_double(eps);
  result.n = static_cast<long>(std::floor(3.0 * std::abs(std::log(eps_d)) / eps_d)) + 1;

  // smallest window anchor x with >= n pattern points in [x, x+1]
  std::vector<Rational> ascending(X.points.rbegin(), X.points.rend());
  long window_lo = -1, window_hi = -1;
  {
    std::size_t hi = 0;
    for (std::size_t lo = 0; lo < ascending.size(); ++lo) {
      if (hi < lo) hi = lo;
      while (hi + 1 < ascending.size() && ascending[hi + 1] <= ascending[lo] + 1) ++hi;
      if (static_cast<long>(hi - lo + 1) >= result.n) {
        window_lo = static_cast<long>(lo);
        window_hi = static_cast<long>(hi);
        break;
      }
    }
  }
  if (window_lo < 0)
    throw Error(ErrorCode::NotClusteredEnough,
                "no unit interval holds n = " + std::to_string(result.n) + " points");
  result.window_u = ascending[static_cast<std::size_t>(window_lo)];
  (void)window_hi;

  std::vector<Rational> y_points(
      ascending.begin() + window_lo,
      ascending.begin() + window_lo + result.n);
  result.Y = make_pattern(y_points, Family::Custom,
                          Json::object({{"role", "thm14b_Y"}}), 0);

  Rational min_gap = result.Y.min_gap();
  result.delta = min_gap < eps / 8 ? min_gap : eps / 9;
  const Rational& d = result.delta;
  result.A = result.window_u - d;
  result.B = result.window_u + 2;

  BigInt k_big = rat_floor(eps / d);
  if (Rational(k_big) * d == eps) k_big -= 1;
  result.k = mpz_get_si(k_big.get_mpz_t());
  if (result.k < 1) throw Error(ErrorCode::BadParams, "eps too small relative to delta");

  // Lemma 8 bound for this configuration has the closed form e^{-k n d/(2+d)}
  const double exponent =
      -static_cast<double>(result.k) * static_cast<double>(result.n) * rat_double(d) /
      (2.0 + rat_double(d));
  result.exp_bound = std::exp(exponent);
  Rational bound_rat(result.exp_bound);  // exact dyadic value of the double
  bound_rat *= Rational(1000001, 1000000);
  const Rational threshold = rat_min(eps, bound_rat);

  const IntervalSet unit = IntervalSet::single(Rational(0), Rational(1));
  auto leftover_of = [&](const IntervalSet& g) {
    std::vector<Interval> translated;
    for (const Rational& y : result.Y.points)
      for (const Interval& iv : g.parts())
        translated.push_back({iv.lo - y, iv.hi - y});
    IntervalSet gy = IntervalSet::normalized(std::move(translated));
    return Rational(1) - set_intersect(unit, gy).measure();
  };

  auto build_G = [&](const std::vector<Rational>& us) {
    std::vector<Interval> raw;
    for (const Rational& u : us) raw.push_back({u, u + d});
    return IntervalSet::normalized(std::move(raw));
  };

  struct Trial {
    bool accepted = false;
    std::vector<Rational> us;
    IntervalSet G;
    Rational leftover;
  };
  auto run_trial = [&](long t) {
    Trial trial;
    TrialStream stream = TrialStream::make(seed, static_cast<std::uint64_t>(t));
    for (long i = 0; i < result.k; ++i)
      trial.us.push_back(stream.uniform(result.A, result.B));
    trial.G = build_G(trial.us);
    trial.leftover = leftover_of(trial.G);
    trial.accepted = trial.leftover < threshold;
    return trial;
  };

  std::optional<Trial> accepted;
  Rational best_leftover(-1);
  long accepted_trial = 0;
  for (long wave = 0; wave < max_trials && !accepted; wave += threads) {
    const long wave_end = std::min<long>(wave + threads, max_trials);
    std::vector<std::future<Trial>> futures;
    for (long t = wave; t < wave_end; ++t)
      futures.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                   run_trial, t));
    for (long t = wave; t < wave_end; ++t) {
      Trial trial = futures[static_cast<std::size_t>(t - wave)].get();
      if (best_leftover < 0 || trial.leftover < best_leftover) best_leftover = trial.leftover;
      if (trial.accepted && !accepted) {
        accepted = std::move(trial);
        accepted_trial = t;
      }
    }
  }

  if (!accepted) {
    // deterministic greedy placement (Lemma 8 coordinate descent, exact)
    Trial greedy;
    const int grid = 256;
    std::vector<Rational> placed;
    for (long i = 0; i < result.k; ++i) {
      Rational best_u;
      Rational best_val(-1);
      for (int c = 0; c < grid; ++c) {
        Rational u = result.A + (result.B - result.A) * Rational(2 * c + 1) / Rational(2 * grid);
        placed.push_back(u);
        Rational val = leftover_of(build_G(placed));
        placed.pop_back();
        if (best_val < 0 || val < best_val) { best_val = val; best_u = u; }
      }
      placed.push_back(best_u);
    }
    greedy.us = placed;
    greedy.G = build_G(placed);
    greedy.leftover = leftover_of(greedy.G);
    greedy.accepted = greedy.leftover < threshold;
    if (!greedy.accepted)
      throw Error(ErrorCode::TrialBudgetExceeded,
                  "no trial reached leftover < " + rat_str(threshold) + "; best " +
                      rat_str(best_leftover) + ", greedy " + rat_str(greedy.leftover));
    accepted = std::move(greedy);
    accepted_trial = -1;
  }

  RandomPlan& plan = result.plan;
  plan.seed = seed;
  plan.trial_index = accepted_trial;
  plan.q = Rational(0);
  plan.tau = d;
  plan.placements = accepted->us;
  plan.G = accepted->G;
  result.leftover = accepted->leftover;

  // repair: shift the uncovered remainder by x0 = max(Y)
  std::vector<Interval> translated;
  for (const Rational& y : result.Y.points)
    for (const Interval& iv : plan.G.parts()) translated.push_back({iv.lo - y, iv.hi - y});
  IntervalSet gy = IntervalSet::normalized(std::move(translated));
  plan.S = set_subtract(unit, gy);
  const Rational x0 = result.Y.points.front();
  plan.H = set_union(plan.G, plan.S.translated(x0));
  plan.measure_G = plan.G.measure();
  plan.measure_S = plan.S.measure();
  plan.measure_H = plan.H.measure();
  plan.target_bound = threshold;

  std::vector<Interval> hy;
  for (const Rational& y : result.Y.points)
    for (const Interval& iv : plan.H.parts()) hy.push_back({iv.lo - y, iv.hi - y});
  result.covers_unit = IntervalSet::normalized(std::move(hy)).contains(unit);
  return result;
}

Lemma8Result lemma8_place(const std::vector<Lemma8Spec>& specs, const Rect& rect,
                          int quadrature_cells) {
  rect.validate();
  if (specs.empty()) throw Error(ErrorCode::EmptyBox, "no sets to place");
  if (quadrature_cells < 2) throw Error(ErrorCode::BadParams, "quadrature_cells >= 2");
  for (const Lemma8Spec& spec : specs) {
    spec.pattern.validate();
    if (spec.A > spec.B) throw Error(ErrorCode::EmptyBox, "placement box [A_i, B_i] empty");
  }

  const int cells = quadrature_cells;
  std::vector<Rational> as(cells), bs(cells);
  for (int i = 0; i < cells; ++i) {
    as[i] = rect.a_lo + rect.width() * Rational(2 * i + 1) / Rational(2 * cells);
    bs[i] = rect.b_lo + rect.height() * Rational(2 * i + 1) / Rational(2 * cells);
  }
  const double cell_area = rat_double(rect.area()) / (cells * cells);

  // quadrature of the exponential bound; inner slice measures are exact
  double bound = 0.0;
  {
    std::vector<std::vector<IntervalSet>> slices(specs.size());
    for (std::size_t s = 0; s < specs.size(); ++s) {
      slices[s].reserve(bs.size());
      for (const Rational& b : bs) slices[s].push_back(slice(specs[s].pattern, specs[s].base, b));
    }
    for (int bi = 0; bi < cells; ++bi) {
      for (int ai = 0; ai < cells; ++ai) {
        double total = 0.0;
        for (std::size_t s = 0; s < specs.size(); ++s) {
          const Rational width = specs[s].B - specs[s].A;
          if (width == 0) continue;
          Rational inner = slices[s][static_cast<std::size_t>(bi)]
                               .clipped(as[ai] - specs[s].B, as[ai] - specs[s].A)
                               .measure();
          total += rat_double(inner / width);
        }
        bound += std::exp(-total) * cell_area;
      }
    }
  }

  // greedy: place u_s minimizing the count of still-uncovered grid points
  Lemma8Result result;
  result.quadrature_cells = cells;
  std::vector<char> uncovered(static_cast<std::size_t>(cells) * cells, 1);
  for (std::size_t s = 0; s < specs.size(); ++s) {
    std::vector<IntervalSet> row_slices;
    row_slices.reserve(bs.size());
    for (const Rational& b : bs) row_slices.push_back(slice(specs[s].pattern, specs[s].base, b));
    long best_count = -1;
    Rational best_u = specs[s].A;
    const int candidates = specs[s].A == specs[s].B ? 1 : cells;
    for (int c = 0; c < candidates; ++c) {
      Rational u = candidates == 1
                       ? specs[s].A
                       : specs[s].A + (specs[s].B - specs[s].A) * Rational(2 * c + 1) /
                             Rational(2 * candidates);
      long count = 0;
      for (int bi = 0; bi < cells; ++bi)
        for (int ai = 0; ai < cells; ++ai)
          if (uncovered[static_cast<std::size_t>(bi) * cells + ai] &&
              !row_slices[static_cast<std::size_t>(bi)].contains_point(as[ai] - u))
            ++count;
      if (best_count < 0 || count < best_count) { best_count = count; best_u = u; }
    }
    result.placements.push_back(best_u);
    for (int bi = 0; bi < cells; ++bi)
      for (int ai = 0; ai < cells; ++ai)
        if (uncovered[static_cast<std::size_t>(bi) * cells + ai] &&
            row_slices[static_cast<std::size_t>(bi)].contains_point(as[ai] - best_u))
          uncovered[static_cast<std::size_t>(bi) * cells + ai] = 0;
  }

  std::vector<BushLayer> layers;
  for (std::size_t s = 0; s < specs.size(); ++s)
    layers.push_back({specs[s].pattern, specs[s].base.translated(result.placements[s])});
  result.exact_leftover = verify_cover_layers(layers, rect).uncovered_area;
  result.bound = bound;
  return result;
}

}  // namespace erdos
