#include "erdos/mu.hpp"

#include <algorithm>

#include "erdos/errors.hpp"

namespace erdos {

Rational mu_lower(const Pattern& Y, const Rect& rect) {
  Y.validate();
  rect.validate();
  return rect.width() / Rational(static_cast<long>(Y.k()));
}

namespace {

Json interval_set_json(const IntervalSet& set) {
  Json arr = Json::array();
  for (const Interval& iv : set.parts())
    arr.push_back(Json::array({rat_str(iv.lo), rat_str(iv.hi)}));
  return arr;
}

IntervalSet cells_to_set(const std::vector<long>& chosen, const Rational& lo, const Rational& h) {
  std::vector<Interval> raw;
  raw.reserve(chosen.size());
  for (long j : chosen) raw.push_back({lo + Rational(j) * h, lo + Rational(j + 1) * h});
  return IntervalSet::normalized(std::move(raw));
}

}  // namespace

MuUpper mu_upper(const Pattern& X, const Rect& rect, const MuUpperOptions& options) {
  X.validate();
  rect.validate();
  if (options.methods.empty()) throw Error(ErrorCode::BadParams, "no methods enabled");
  std::vector<std::string> reasons;
  if (!(rect.width() > 0))
    throw Error(ErrorCode::AllMethodsFailed, "degenerate rectangle width");
  if (rect.b_lo < 1 || rect.b_hi > 2)
    throw Error(ErrorCode::AllMethodsFailed,
                "constructions target b-ranges within [1,2]; transport the rectangle first");

  std::optional<MuUpper> best;
  auto consider = [&](UpperMethod method, const IntervalSet& base, Json certificate) {
    IntervalSet transported = base.affine(rect.a_lo, rect.width());
    CoverageReport check = verify_cover(X, transported, rect);
    if (!check.covered) {
      reasons.push_back("transported set failed verification (unexpected)");
      return;
    }
    Rational value = transported.measure();
    if (!best || value < best->value)
      best = MuUpper{value, method, transported, std::move(certificate)};
  };

  if (options.methods.count(UpperMethod::Lemma3)) {
    try {
      Lemma3Plan plan = lemma3_construct(X);
      if (plan.verification.covered)
        consider(UpperMethod::Lemma3, plan.G, plan.to_json());
      else
        reasons.push_back("lemma3: constructed set failed verification");
    } catch (const Error& e) {
      reasons.push_back(std::string("lemma3: ") + e.what());
    }
  }
  if (options.methods.count(UpperMethod::Thm15)) {
    try {
      Thm15Result run =
          thm15_similarity_cover(X, options.eps, options.seed, options.max_trials);
      consider(UpperMethod::Thm15, run.plan.H, run.plan.to_json());
    } catch (const Error& e) {
      reasons.push_back(std::string("thm15: ") + e.what());
    }
  }

  if (!best) {
    std::string joined;
    for (const auto& r : reasons) joined += (joined.empty() ? "" : "; ") + r;
    throw Error(ErrorCode::AllMethodsFailed, joined);
  }
  return *best;
}

OracleResult oracle_setcover(const Pattern& Y, const Rect& rect, const OracleParams& params) {
  Y.validate();
  rect.validate();
  if (!(params.h > 0)) throw Error(ErrorCode::BadParams, "h > 0");
  if (!(params.window_hi > params.window_lo))
    throw Error(ErrorCode::BadParams, "empty oracle window");
  Rational count = (params.window_hi - params.window_lo) / params.h;
  if (count.get_den() != 1)
    throw Error(ErrorCode::BadParams, "h must divide the window length");
  const long n_cells = mpz_get_si(count.get_num().get_mpz_t());
  if (params.solver == OracleSolver::Exact && n_cells > 24)
    throw Error(ErrorCode::BadParams, "exact solver limited to 24 cells");

  auto cell_set = [&](long j) {
    return IntervalSet::single(params.window_lo + Rational(j) * params.h,
                               params.window_lo + Rational(j + 1) * params.h);
  };

  if (params.solver == OracleSolver::Greedy) {
    UncoveredComplex complex = UncoveredComplex::full(rect);
    std::vector<char> used(static_cast<std::size_t>(n_cells), 0);
    std::vector<long> chosen;
    while (!complex.empty()) {
      Rational current = complex.area();
      long best_j = -1;
      Rational best_delta(0);
      for (long j = 0; j < n_cells; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        UncoveredComplex probe = complex;
        IntervalSet cell = cell_set(j);
        for (const Rational& y : Y.points) {
          if (probe.empty()) break;
          probe.subtract_point_strips(y, cell);
        }
        Rational delta = current - probe.area();
        if (delta > best_delta) { best_delta = delta; best_j = j; }
      }
      if (best_j < 0)
        throw Error(ErrorCode::WindowTooSmall,
                    "remaining cells add no coverage; uncovered area " + rat_str(current));
      used[static_cast<std::size_t>(best_j)] = 1;
      chosen.push_back(best_j);
      IntervalSet cell = cell_set(best_j);
      for (const Rational& y : Y.points) {
        if (complex.empty()) break;
        complex.subtract_point_strips(y, cell);
      }
    }
    std::sort(chosen.begin(), chosen.end());
    OracleResult result;
    result.value = Rational(static_cast<long>(chosen.size())) * params.h;
    result.G = cells_to_set(chosen, params.window_lo, params.h);
    result.cells = std::move(chosen);
    return result;
  }

  // exact: increasing cardinality, lexicographic combinations
  Rational lower = mu_lower(Y, rect);
  long c_min = std::max<long>(1, mpz_get_si(rat_ceil(lower / params.h).get_mpz_t()));
  for (long c = c_min; c <= n_cells; ++c) {
    std::vector<long> combo(static_cast<std::size_t>(c));
    for (long i = 0; i < c; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
      IntervalSet G = cells_to_set(combo, params.window_lo, params.h);
      if (verify_cover(Y, G, rect).covered) {
        OracleResult result;
        result.value = Rational(c) * params.h;
        result.cells = combo;
        result.G = std::move(G);
        return result;
      }
      // next combination
      long i = c - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == n_cells - c + i) --i;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (long t = i + 1; t < c; ++t)
        combo[static_cast<std::size_t>(t)] = combo[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  throw Error(ErrorCode::WindowTooSmall, "no cell union covers the rectangle");
}

Json MuEstimate::to_json() const {
  Json j = Json::object();
  j["lower"] = rat_str(lower);
  if (upper) j["upper"] = rat_str(*upper);
  if (!upper_method.empty()) j["upper_method"] = upper_method;
  if (oracle_value) j["oracle_value"] = rat_str(*oracle_value);
  if (!oracle_params.is_null()) j["oracle_params"] = oracle_params;
  return j;
}

Json GeometricProbe::to_json() const {
  Json j = Json::object();
  j["value_base"] = rat_str(value_base);
  j["value_scaled"] = rat_str(value_scaled);
  j["value_transported"] = rat_str(value_transported);
  j["scale_slack"] = rat_str(scale_slack);
  j["scale_consistent"] = scale_consistent;
  j["value_translated"] = rat_str(value_translated);
  j["translation_consistent"] = translation_consistent;
  return j;
}

GeometricProbe geometric_mu_probe(const Rational& rho, int stage, const Rect& rect, int r) {
  if (!(rho > 0 && rho < 1)) throw Error(ErrorCode::BadParams, "rho in (0,1)");
  if (r < 1) throw Error(ErrorCode::BadParams, "r >= 1");
  GenParams gp;
  gp.ratio = rho;
  Pattern Y = generate(Family::Geometric, gp, stage);

  Rational radius = Y.max_abs();
  Rational w_lo = -2 * radius - 2;
  Rational w_hi = 2 * radius + 3;
  Rational h = (w_hi - w_lo) / 64;

  GeometricProbe probe;
  OracleParams base{w_lo, w_hi, h, OracleSolver::Greedy};
  probe.value_base = oracle_setcover(Y, rect, base).value;

  const Rational scale = rat_pow2(r);
  const Rational inv = rat_pow2(-r);
  Pattern Y_small = Y.scaled(inv);
  OracleParams scaled_params{w_lo * inv, w_hi * inv, h * inv, OracleSolver::Greedy};
  probe.value_scaled = oracle_setcover(Y_small, rect, scaled_params).value;

  Rect transported{rect.a_lo * scale, rect.a_hi * scale, rect.b_lo, rect.b_hi};
  OracleParams trans_params{w_lo * scale, w_hi * scale, h * scale, OracleSolver::Greedy};
  probe.value_transported = oracle_setcover(Y, transported, trans_params).value * inv;

  probe.scale_slack = h * Rational(static_cast<long>(Y.k()));
  probe.scale_consistent =
      rat_abs(probe.value_scaled - probe.value_transported) <= probe.scale_slack;

  Rect shifted{rect.a_lo + 1, rect.a_hi + 1, rect.b_lo, rect.b_hi};
  OracleParams shift_params{w_lo + 1, w_hi + 1, h, OracleSolver::Greedy};
  probe.value_translated = oracle_setcover(Y, shifted, shift_params).value;
  probe.translation_consistent = probe.value_translated == probe.value_base;
  return probe;
}

}  // namespace erdos
