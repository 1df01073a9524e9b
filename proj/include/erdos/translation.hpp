#pragma once

#include "erdos/bush.hpp"

namespace erdos {

struct TranslationReport {
  long M = 0;                // uniform local finiteness constant of the truncation
  Rational window_u, window_v;
  Rational lhs;              // measure((G - X) ∩ [u, v])
  Rational rhs;              // measure(G) * M * (v - u + 1/M)
  IntervalSet witness_set;   // [u, v] \ (G - X)
  Rational fraction;         // measure(witness)/(v - u)
  Rational tau;              // 1 - M * measure(G); bound vacuous when <= 0
  bool bound_vacuous = false;

  Json to_json() const;
};

// Theorem 14(a) finite-window check: exact G - X against [u, v].
TranslationReport thm14a_check(const Pattern& X, const IntervalSet& G, const Rational& u,
                               const Rational& v);

}  // namespace erdos
