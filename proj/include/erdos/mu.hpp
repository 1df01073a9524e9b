#pragma once

#include <set>

#include "erdos/bush.hpp"
#include "erdos/construct_det.hpp"
#include "erdos/construct_rand.hpp"

namespace erdos {

// Per-slice covering bound: any G whose bush covers R has measure at least
// width(R)/|Y|.
Rational mu_lower(const Pattern& Y, const Rect& rect);

enum class UpperMethod { Lemma3, Thm15 };

struct MuUpper {
  Rational value;
  UpperMethod method;
  IntervalSet G;
  Json certificate;
};

struct MuUpperOptions {
  std::set<UpperMethod> methods{UpperMethod::Lemma3, UpperMethod::Thm15};
  Rational eps{1, 2};          // thm15 target
  std::uint64_t seed = 0;
  int max_trials = 64;
};

// Minimum exact measure over the enabled constructions of a verified covering
// set for R (b-range within [1,2]; a-side handled by affine transport).
MuUpper mu_upper(const Pattern& X, const Rect& rect, const MuUpperOptions& options);

enum class OracleSolver { Greedy, Exact };

struct OracleParams {
  Rational window_lo, window_hi;
  Rational h;
  OracleSolver solver = OracleSolver::Greedy;
};

struct OracleResult {
  Rational value;          // selected cells * h
  std::vector<long> cells; // selected cell indices
  IntervalSet G;
};

// Discretized set-cover upper bound over cell unions, exact verification per
// candidate. Throws WindowTooSmall when even all cells fail to cover.
OracleResult oracle_setcover(const Pattern& Y, const Rect& rect, const OracleParams& params);

struct MuEstimate {
  Rational lower;
  std::optional<Rational> upper;
  std::string upper_method;
  std::optional<Rational> oracle_value;
  Json oracle_params;

  Json to_json() const;
};

struct GeometricProbe {
  Rational value_base;         // oracle value for Y on R
  Rational value_scaled;       // oracle value for Y/2^r on R
  Rational value_transported;  // oracle value for Y on phi_{2^r}(R), divided by 2^r
  Rational scale_slack;        // allowed |value_scaled - value_transported|
  bool scale_consistent = false;
  Rational value_translated;   // oracle value for Y on R + (1,0), shifted window
  bool translation_consistent = false;

  Json to_json() const;
};

// Empirical checks of the geometric-sequence transport identities at a fixed
// truncation, via the set-cover oracle on both sides.
GeometricProbe geometric_mu_probe(const Rational& rho, int stage, const Rect& rect, int r = 1);

}  // namespace erdos
