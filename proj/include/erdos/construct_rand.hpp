#pragma once

#include <cstdint>
#include <optional>

#include "erdos/bush.hpp"

namespace erdos {

struct SelectionResult {
  Pattern X_star;
  long n = 0;
  Rational delta;     // relative min gap of X_star
  Rational C_X, q;
  Rational lhs;       // 4(1+C_X) n (1-q)^n / delta, exact
  Rational rhs;       // eps/3
  bool guaranteed = false;  // lhs <= rhs
  Json table = Json::array();

  Json to_json() const;
};

// Picks the subset driving the Theorem 15 randomized cover. The proof's
// sufficient condition is checked in its pre-logarithm form
// 4(1+C_X) n (1-q)^n / delta <= eps/3 with exact rational powers. With
// require_guarantee the call fails when no subset satisfies it; otherwise
// the subset minimizing the left-hand side is returned with guaranteed=false.
SelectionResult select_Xstar(const Pattern& X, const Rational& eps,
                             bool require_guarantee = true);

struct RandomPlan {
  std::uint64_t seed = 0;
  long trial_index = 0;  // -1 marks the deterministic greedy fallback
  Rational q;            // Bernoulli parameter (0 when unused)
  Rational tau;          // cell width / interval length
  long cell_m = 0, cell_M = 0;
  std::vector<long> chosen_cells;
  std::vector<Rational> placements;  // thm14b translation offsets
  IntervalSet G, S, H;
  Rational measure_G, measure_S, measure_H;
  Rational target_bound;  // accept threshold on the pre-repair defect

  Json to_json() const;
};

struct Thm15Params {
  Rational C_X, eps, q;
  long n = 0;
  Pattern X_star, Y;
  Rational delta, tau;
  Rational A, B;

  Json to_json() const;
};

struct Thm15Result {
  Thm15Params params;
  SelectionResult selection;
  RandomPlan plan;
  CoverageReport final_verification;  // X_star, H over [0,1]x[1,2]
};

Thm15Result thm15_similarity_cover(const Pattern& X, const Rational& eps, std::uint64_t seed,
                                   int max_trials, int threads = 1);

struct Thm14bResult {
  Rational eps, delta;
  long n = 0, k = 0;
  Rational window_u;         // chosen unit interval [u, u+1]
  Rational A, B;             // placement box
  Pattern Y;
  RandomPlan plan;
  Rational leftover;         // measure([0,1] \ (G - Y)), exact
  double exp_bound = 0.0;    // e^{-k n delta/(2+delta)}
  double quadrature_tol = 1e-6;
  bool covers_unit = false;  // [0,1] ⊆ H - Y, exact
};

Thm14bResult thm14b_translation_cover(const Pattern& X, const Rational& eps,
                                      std::uint64_t seed, int max_trials, int threads = 1);

struct Lemma8Spec {
  Pattern pattern;
  IntervalSet base;   // E = L_pattern(base)
  Rational A, B;      // placement interval for this set
};

struct Lemma8Result {
  std::vector<Rational> placements;
  double bound = 0.0;          // quadrature value of the exponential integral
  Rational exact_leftover;     // area of R not covered by the placed sets
  int quadrature_cells = 0;
};

// Greedy coordinate descent on a midpoint-quadrature grid; all accept/reject
// style conclusions use the exact leftover, the integral is reporting only.
Lemma8Result lemma8_place(const std::vector<Lemma8Spec>& specs, const Rect& rect,
                          int quadrature_cells);

}  // namespace erdos
