#include "erdos/construct_det.hpp"

#include <algorithm>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

const Rect kCanonicalRect{Rational(0), Rational(1), Rational(1), Rational(2)};

Json interval_set_json(const IntervalSet& set) {
  Json arr = Json::array();
  for (const Interval& iv : set.parts())
    arr.push_back(Json::array({rat_str(iv.lo), rat_str(iv.hi)}));
  return arr;
}

}  // namespace

Json Lemma3Plan::to_json() const {
  Json j = Json::object();
  j["M"] = rat_str(M);
  j["r"] = r;
  Json uj = Json::array();
  for (const Rational& v : u) uj.push_back(rat_str(v));
  j["u"] = uj;
  j["shift"] = rat_str(shift);
  j["G"] = interval_set_json(G);
  j["measure"] = rat_str(measure);
  j["bound"] = rat_str(bound);
  j["covered"] = verification.covered;
  return j;
}

Lemma3Plan lemma3_construct(const Pattern& pattern) {
  pattern.validate();
  if (pattern.k() < 2) throw Error(ErrorCode::TooFewPoints, "lemma3 needs k >= 2");

  const Rational y1 = pattern.points.front();
  const Rational yk = pattern.points.back();
  const Rational span = y1 - yk;

  Lemma3Plan plan;
  plan.M = pattern.max_gap();
  plan.shift = yk < 0 ? Rational(-yk) : Rational(0);

  // After shifting by -y_k the pattern sits in [0, span] and must cover the
  // image of the canonical rectangle, bounded by [2*y_k, 1+y_k] x [1,2].
  Rational a0(0), a1(1), top = y1;
  if (plan.shift != 0) {
    a0 = 2 * yk;
    a1 = 1 + yk;
    top = span;  // shifted y1
  }
  const Rational delta = 2 * plan.M + span;
  plan.r = static_cast<long>(mpz_get_si(rat_ceil((a1 - a0 + top) / delta).get_mpz_t()));

  std::vector<Interval> blocks;
  Rational u0 = a0 + top;
  for (long j = 0; j <= plan.r; ++j) {
    Rational uj = u0 + Rational(j) * delta;
    plan.u.push_back(uj);
    blocks.push_back({uj, uj + 2 * plan.M});
  }
  plan.G = IntervalSet::normalized(std::move(blocks));
  plan.measure = plan.G.measure();
  plan.bound = 4 * plan.M * (a1 - a0 + top) / span;
  plan.verification = verify_cover(pattern, plan.G, kCanonicalRect);
  return plan;
}

Theorem4Witness theorem4_witness(const Pattern& pattern, const Rational& eps, int stages) {
  pattern.validate();
  if (eps <= 0) throw Error(ErrorCode::BadParams, "eps > 0");
  if (stages < 1) throw Error(ErrorCode::BadParams, "stages >= 1");
  if (pattern.k() < static_cast<std::size_t>(stages) + 1)
    throw Error(ErrorCode::TooFewPoints, "pattern too short for the requested stages");

  Theorem4Witness witness;
  witness.eps = eps;
  witness.total_measure = Rational(0);
  IntervalSet G;

  for (int s = 1; s <= stages; ++s) {
    Pattern tail = pattern.tail(static_cast<std::size_t>(s - 1));
    const auto& y = tail.points;

    // best contiguous run by span / (max gap * (1+|y_i|+|y_j|)); ties toward
    // larger span. eps_achieved is the reciprocal of that score.
    bool found = false;
    Rational best_eps, best_span;
    std::size_t best_i = 0, best_j = 0;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
      Rational maxgap(0);
      for (std::size_t j = i + 1; j < y.size(); ++j) {
        maxgap = rat_max(maxgap, y[j - 1] - y[j]);
        Rational run_span = y[i] - y[j];
        Rational eps_run = maxgap * (Rational(1) + rat_abs(y[i]) + rat_abs(y[j])) / run_span;
        if (!found || eps_run < best_eps ||
            (eps_run == best_eps && run_span > best_span)) {
          found = true;
          best_eps = eps_run;
          best_span = run_span;
          best_i = i;
          best_j = j;
        }
      }
    }

    std::vector<std::size_t> indices;
    for (std::size_t idx = best_i; idx <= best_j; ++idx) indices.push_back(idx);
    StageCertificate cert;
    cert.stage = s;
    cert.subset = tail.subset(indices);
    cert.eps_achieved = best_eps;
    cert.target = eps * rat_pow2(-s);
    cert.plan = lemma3_construct(cert.subset);
    if (cert.plan.measure >= cert.target)
      throw Error(ErrorCode::NotFineEnough,
                  "stage " + std::to_string(s) + ": best relative fineness " +
                      rat_str(best_eps) + " gives measure " + rat_str(cert.plan.measure) +
                      " >= target " + rat_str(cert.target));
    if (!cert.plan.verification.covered)
      throw Error(ErrorCode::NotFineEnough,
                  "stage " + std::to_string(s) + ": constructed set failed verification");
    witness.total_measure += cert.plan.measure;
    G = set_union(G, cert.plan.G);
    witness.stages.push_back(std::move(cert));
  }
  witness.G = std::move(G);
  return witness;
}

std::pair<Rational, Rational> min_slice_measure_over_b(const Pattern& Z, const Rational& delta,
                                                       const Rational& C, const Rational& D,
                                                       const Rational& b_lo,
                                                       const Rational& b_hi) {
  std::vector<Rational> events{b_lo, b_hi};
  const auto& z = Z.points;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      Rational gap = z[i] - z[j];
      if (gap != 0) events.push_back(delta / gap);
    }
    if (z[i] != 0) {
      for (const Rational& w : {C, D}) {
        events.push_back(-w / z[i]);
        events.push_back((delta - w) / z[i]);
      }
    }
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  IntervalSet base = IntervalSet::single(Rational(0), delta);
  bool first = true;
  Rational best, best_b;
  for (const Rational& b : events) {
    if (b < b_lo || b > b_hi) continue;
    Rational m = slice(Z, base, b).clipped(C, D).measure();
    if (first || m < best) {
      best = m;
      best_b = b;
      first = false;
    }
  }
  return {best, best_b};
}

Json Lemma10Stage::to_json() const {
  Json j = Json::object();
  j["m"] = m;
  j["n_m"] = n_m;
  j["delta_m"] = rat_str(delta_m);
  j["p_m"] = p_m;
  j["C"] = rat_str(C);
  j["D"] = rat_str(D);
  j["Z_m"] = Z_m.to_json()["points"];
  j["min_slice_measure"] = rat_str(min_slice_measure);
  j["argmin_b"] = rat_str(argmin_b);
  j["checks"] = Json::object({{"slice_containment", check_slice_containment},
                              {"slice_measure", check_slice_measure},
                              {"measure_sum", check_measure_sum},
                              {"density", check_density}});
  return j;
}

Lemma10Stage lemma10_stage(const Pattern& pattern, int m,
                           const std::optional<Rational>& delta_override) {
  pattern.validate();
  if (m < 1) throw Error(ErrorCode::BadParams, "m >= 1");

  std::vector<Rational> ascending(pattern.points.rbegin(), pattern.points.rend());
  BigInt radius_cap = rat_ceil(pattern.max_abs());
  if (radius_cap < 1) radius_cap = 1;

  Lemma10Stage stage;
  stage.m = m;
  Rational two_m = rat_pow2(m);

  long n_m = 0;
  std::vector<Rational> window;
  for (BigInt n(1); n <= radius_cap; ++n) {
    Rational lo{-n}, hi{n};
    window.clear();
    for (const Rational& x : ascending)
      if (x >= lo && x <= hi) window.push_back(x);
    if (Rational(static_cast<long>(window.size())) >= two_m * Rational(n)) {
      n_m = mpz_get_si(n.get_mpz_t());
      break;
    }
  }
  if (n_m == 0)
    throw Error(ErrorCode::NotDenseEnough,
                "no n with card(X ∩ [-n,n]) >= 2^m n up to radius " + radius_cap.get_str());
  stage.n_m = n_m;

  const long want = mpz_get_si(BigInt(two_m.get_num() * n_m).get_mpz_t());

  auto greedy_separated = [&](const Rational& sep) {
    std::vector<Rational> picked;
    for (const Rational& x : window) {
      if (picked.empty() || x - picked.back() >= sep) picked.push_back(x);
      if (static_cast<long>(picked.size()) == want) break;
    }
    return picked;
  };

  std::vector<Rational> picked;
  if (delta_override) {
    if (!(*delta_override > 0) || !(*delta_override < rat_pow2(-m)))
      throw Error(ErrorCode::BadParams, "delta_m must lie in (0, 2^-m)");
    stage.delta_m = *delta_override;
    picked = greedy_separated(stage.delta_m);
    if (static_cast<long>(picked.size()) < want)
      throw Error(ErrorCode::NotDenseEnough,
                  "no delta_m-separated set of size " + std::to_string(want));
  } else {
    // largest power of two in (0, 2^-m) admitting a separated set of the
    // required size; halve until the greedy inside [-n_m, n_m] succeeds
    Rational candidate = rat_pow2(-m - 1);
    while (true) {
      picked = greedy_separated(candidate);
      if (static_cast<long>(picked.size()) == want) break;
      candidate /= 2;
    }
    stage.delta_m = candidate;
  }

  stage.Z_m = make_pattern(picked, Family::Custom,
                           Json::object({{"role", "lemma10_Z"}, {"m", m}}), m);
  stage.p_m = mpz_get_si(rat_floor(rat_pow2(-m) / stage.delta_m).get_mpz_t());
  stage.C = Rational(-2 * n_m - 1);
  stage.D = Rational(2 * n_m + 1);
  stage.H = IntervalSet::single(Rational(0), stage.delta_m);

  auto [min_measure, argmin] =
      min_slice_measure_over_b(stage.Z_m, stage.delta_m, stage.C, stage.D, Rational(1), Rational(2));
  stage.min_slice_measure = min_measure;
  stage.argmin_b = argmin;

  // (a) Z_m ⊆ X plus slice nesting at the evaluation endpoints
  bool contained = true;
  for (const Rational& z : stage.Z_m.points)
    if (!std::binary_search(ascending.begin(), ascending.end(), z)) contained = false;
  if (contained) {
    for (const Rational& b : {Rational(1), Rational(3, 2), Rational(2)}) {
      IntervalSet zs = slice(stage.Z_m, stage.H, b);
      IntervalSet xs = slice(pattern, stage.H, b);
      if (!xs.contains(zs)) contained = false;
    }
  }
  stage.check_slice_containment = contained;
  stage.check_slice_measure = min_measure >= two_m * Rational(n_m) * stage.delta_m;
  stage.check_measure_sum = Rational(stage.p_m) * stage.delta_m <= rat_pow2(-m);
  stage.check_density =
      Rational(stage.p_m) * two_m * Rational(n_m) * stage.delta_m /
          (Rational(4 * n_m + 3)) >= rat_pow2(-4);
  return stage;
}

}  // namespace erdos
