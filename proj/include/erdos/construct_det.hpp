#pragma once

#include "erdos/bush.hpp"

namespace erdos {

// Periodic layering: G = union of r+1 blocks [u_j, u_j + 2M] spaced by
// 2M + span, covering [0,1]x[1,2]. Mixed-sign patterns are reduced to a
// nonnegative shifted copy first; `shift` records the reduction.
struct Lemma3Plan {
  Rational M;
  long r = 0;
  std::vector<Rational> u;
  IntervalSet G;
  Rational measure;
  Rational bound;        // 4M(width + u-offset)/span; canonical: 4M(1+y1)/(y1-yk)
  Rational shift;        // 0 when y_k >= 0
  CoverageReport verification;  // over [0,1]x[1,2], always re-verified

  Json to_json() const;
};

Lemma3Plan lemma3_construct(const Pattern& pattern);

struct StageCertificate {
  int stage = 0;
  Pattern subset;
  Rational eps_achieved;  // max-gap * (1+|y1|+|yk|) / span of the chosen subset
  Rational target;        // eps * 2^{-stage}
  Lemma3Plan plan;
};

struct Theorem4Witness {
  Rational eps;
  IntervalSet G;
  Rational total_measure;  // sum of exact stage measures; union <= this
  std::vector<StageCertificate> stages;
};

// Finite-stage witness: stage s works on the pattern with the first s-1
// elements removed and contributes a Lemma 3 set of measure < eps*2^{-s}.
Theorem4Witness theorem4_witness(const Pattern& pattern, const Rational& eps, int stages);

struct Lemma10Stage {
  int m = 0;
  long n_m = 0;
  Rational delta_m;
  Pattern Z_m;               // 2^m * n_m points, delta_m-separated
  long p_m = 0;              // floor(2^{-m} / delta_m); H repeated p_m times
  Rational C, D;             // window [-2n_m-1, 2n_m+1]
  IntervalSet H;             // [0, delta_m], stored once
  Rational min_slice_measure;  // exact min over b in [1,2] of |slice(Z_m,H,b) ∩ [C,D]|
  Rational argmin_b;
  bool check_slice_containment = false;  // (a)
  bool check_slice_measure = false;      // (b) min >= 2^m n_m delta_m
  bool check_measure_sum = false;        // (c) p_m delta_m <= 2^{-m}
  bool check_density = false;            // (d) p_m (4n_m+3)^{-1} 2^m n_m delta_m >= 2^{-4}

  Json to_json() const;
};

Lemma10Stage lemma10_stage(const Pattern& pattern, int m,
                           const std::optional<Rational>& delta_override = std::nullopt);

// Exact minimum over b in [b_lo, b_hi] of |slice(Z, [0,delta], b) ∩ [C, D]|,
// by piecewise-affine minimization over overlap/window events.
std::pair<Rational, Rational> min_slice_measure_over_b(const Pattern& Z, const Rational& delta,
                                                       const Rational& C, const Rational& D,
                                                       const Rational& b_lo,
                                                       const Rational& b_hi);

}  // namespace erdos
