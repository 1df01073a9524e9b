#pragma once

#include "erdos/pattern.hpp"

namespace erdos {

struct FinenessReport {
  Rational rel_fineness;    // max gap / span
  Rational rel_separation;  // min gap / span
  Rational arf_score;       // min over element pairs of (longest gap in (u,v))/(v-u)*(|u|+|v|+1)
  long ulf_bound = 0;       // max element count over windows [y, y+1]
  Rational lb_ratio;        // max over n of card(P in [-n,n]) / n

  Json to_json() const;
};

// Throws Error(TooFewPoints) when k < 2.
FinenessReport fineness(const Pattern& pattern);

struct SeparatedSubset {
  Pattern subset;
  Rational eps;
  Rational min_gap_rel;       // (min gap of subset)/span(P), >= eps by construction
  Rational max_gap_rel;       // (max gap of subset)/span(P)
  bool three_eps_fine = false;  // whether max_gap_rel <= 3*eps (checked, not assumed)
};

// Greedy thinning keeping both endpoints; requires P relatively eps-fine.
SeparatedSubset extract_separated_subset(const Pattern& pattern, const Rational& eps);

struct NDeltaResult {
  long count = 0;
  Pattern witness;
};

// Maximum cardinality of a relatively delta-separated subset; 0 < delta <= 1.
NDeltaResult n_delta(const Pattern& pattern, const Rational& delta);

struct DeltaNResult {
  Rational delta;
  Pattern witness;
};

// Exact supremum (attained) of relative separations over size-n subsets; 3 <= n <= k.
DeltaNResult delta_n(const Pattern& pattern, long n);

// Best min-gap subset of given size with both endpoints fixed, used by delta_n
// and by the selection machinery; indices refer to the descending point array.
struct FixedEndpointBest {
  Rational gap;                       // best achievable min absolute gap
  std::vector<std::size_t> indices;   // chosen subset, ascending indices
};
FixedEndpointBest best_min_gap_subset(const Pattern& pattern, std::size_t i, std::size_t j,
                                      long n, const std::vector<Rational>& sorted_diffs);

// All positive pairwise differences, sorted ascending, deduplicated.
std::vector<Rational> pairwise_differences(const Pattern& pattern);

}  // namespace erdos
