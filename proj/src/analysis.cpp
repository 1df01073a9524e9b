#include "erdos/analysis.hpp"

#include <algorithm>

#include "erdos/errors.hpp"

namespace erdos {

Json FinenessReport::to_json() const {
  Json j = Json::object();
  j["rel_fineness"] = rat_str(rel_fineness);
  j["rel_separation"] = rat_str(rel_separation);
  j["arf_score"] = rat_str(arf_score);
  j["ulf_bound"] = ulf_bound;
  j["lb_ratio"] = rat_str(lb_ratio);
  return j;
}

FinenessReport fineness(const Pattern& pattern) {
  const auto& y = pattern.points;
  const std::size_t k = y.size();
  if (k < 2) throw Error(ErrorCode::TooFewPoints, "fineness needs k >= 2");

  FinenessReport report;
  Rational span = pattern.span();
  report.rel_fineness = pattern.max_gap() / span;
  report.rel_separation = pattern.min_gap() / span;

  // arf over element pairs (v, u) = (y_i, y_j), i < j: longest interior gap
  // times (1 + |v| + |u|) / (v - u), minimized.
  bool first = true;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Rational longest(0);
    for (std::size_t j = i + 1; j < k; ++j) {
      longest = rat_max(longest, y[j - 1] - y[j]);
      Rational score = longest / (y[i] - y[j]) * (Rational(1) + rat_abs(y[i]) + rat_abs(y[j]));
      if (first || score < report.arf_score) { report.arf_score = score; first = false; }
    }
  }

  // windows [y_j, y_j + 1]; descending storage, so scan upward from j
  long best_count = 1;
  for (std::size_t j = 0; j < k; ++j) {
    Rational top = y[j] + 1;
    long count = 0;
    for (std::size_t i = j + 1; i-- > 0;) {
      if (y[i] <= top) { count = static_cast<long>(j - i + 1); break; }
    }
    if (count == 0) count = 1;
    best_count = std::max(best_count, count);
  }
  report.ulf_bound = best_count;

  // card(P in [-n, n]) / n jumps only at n = ceil(|y_i|)
  std::vector<Rational> abs_sorted;
  abs_sorted.reserve(k);
  for (const auto& v : y) abs_sorted.push_back(rat_abs(v));
  std::sort(abs_sorted.begin(), abs_sorted.end());
  std::vector<BigInt> candidates{BigInt(1)};
  for (const auto& v : abs_sorted) {
    BigInt n = rat_ceil(v);
    if (n > 1) candidates.push_back(n);
  }
  bool first_ratio = true;
  for (const BigInt& n : candidates) {
    Rational radius{n};
    auto it = std::upper_bound(abs_sorted.begin(), abs_sorted.end(), radius);
    long count = static_cast<long>(it - abs_sorted.begin());
    Rational ratio = Rational(count) / radius;
    if (first_ratio || ratio > report.lb_ratio) { report.lb_ratio = ratio; first_ratio = false; }
  }
  return report;
}

SeparatedSubset extract_separated_subset(const Pattern& pattern, const Rational& eps) {
  const auto& y = pattern.points;
  const std::size_t k = y.size();
  if (k < 2) throw Error(ErrorCode::TooFewPoints, "extract_separated_subset needs k >= 2");
  if (eps <= 0 || eps > 1) throw Error(ErrorCode::BadParams, "eps in (0, 1]");
  Rational span = pattern.span();
  Rational threshold = eps * span;
  if (pattern.max_gap() > threshold)
    throw Error(ErrorCode::NotFineEnough,
                "pattern is not relatively " + rat_str(eps) + "-fine (max relative gap " +
                    rat_str(pattern.max_gap() / span) + ")");

  std::vector<std::size_t> kept{0};
  for (std::size_t idx = 1; idx + 1 < k; ++idx)
    if (y[kept.back()] - y[idx] >= threshold) kept.push_back(idx);
  if (y[kept.back()] - y[k - 1] >= threshold)
    kept.push_back(k - 1);
  else
    kept.back() = k - 1;  // merge the short tail gap into the previous one

  SeparatedSubset result;
  result.subset = pattern.subset(kept);
  result.eps = eps;
  result.min_gap_rel = result.subset.k() >= 2 ? result.subset.min_gap() / span : Rational(1);
  result.max_gap_rel = result.subset.k() >= 2 ? result.subset.max_gap() / span : Rational(0);
  result.three_eps_fine = result.max_gap_rel <= 3 * eps;
  return result;
}

namespace {

// Greedy chain from y_i toward y_j with absolute gap >= t, all points kept
// at least t above y_j; returns the chain (ascending indices, starts at i).
std::vector<std::size_t> greedy_chain(const std::vector<Rational>& y, std::size_t i,
                                      std::size_t j, const Rational& t) {
  std::vector<std::size_t> chain{i};
  for (std::size_t idx = i + 1; idx < j; ++idx) {
    if (y[chain.back()] - y[idx] >= t && y[idx] - y[j] >= t) chain.push_back(idx);
  }
  return chain;
}

}  // namespace

NDeltaResult n_delta(const Pattern& pattern, const Rational& delta) {
  const auto& y = pattern.points;
  const std::size_t k = y.size();
  if (delta <= 0 || delta > 1) throw Error(ErrorCode::OutOfRange, "delta in (0, 1]");
  if (k < 2) throw Error(ErrorCode::OutOfRange, "n_delta needs k >= 2");

  NDeltaResult best;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Rational t = delta * (y[i] - y[j]);
      std::vector<std::size_t> chain = greedy_chain(y, i, j, t);
      long count = static_cast<long>(chain.size()) + 1;
      if (count > best.count) {
        chain.push_back(j);
        best.count = count;
        best.witness = pattern.subset(chain);
      }
    }
  }
  return best;
}

FixedEndpointBest best_min_gap_subset(const Pattern& pattern, std::size_t i, std::size_t j,
                                      long n, const std::vector<Rational>& sorted_diffs) {
  const auto& y = pattern.points;
  Rational span = y[i] - y[j];
  auto feasible = [&](const Rational& t) {
    return static_cast<long>(greedy_chain(y, i, j, t).size()) + 1 >= n;
  };
  // restrict to candidate gaps <= span/(n-1) (pigeonhole) and >= 0
  Rational cap = span / Rational(n - 1);
  std::size_t lo = 0;
  std::size_t hi = static_cast<std::size_t>(
      std::upper_bound(sorted_diffs.begin(), sorted_diffs.end(), cap) - sorted_diffs.begin());
  if (hi == 0 || !feasible(sorted_diffs[0])) return {Rational(0), {}};
  // invariant: feasible(diffs[lo]), !feasible(diffs[hi]) (hi one past range)
  while (lo + 1 < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(sorted_diffs[mid])) lo = mid; else hi = mid;
  }
  Rational best_t = sorted_diffs[lo];
  std::vector<std::size_t> chain = greedy_chain(y, i, j, best_t);
  chain.resize(static_cast<std::size_t>(n - 1));
  chain.push_back(j);
  return {best_t, std::move(chain)};
}

std::vector<Rational> pairwise_differences(const Pattern& pattern) {
  const auto& y = pattern.points;
  std::vector<Rational> diffs;
  diffs.reserve(y.size() * (y.size() - 1) / 2);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j) diffs.push_back(y[i] - y[j]);
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  return diffs;
}

DeltaNResult delta_n(const Pattern& pattern, long n) {
  const auto& y = pattern.points;
  const long k = static_cast<long>(y.size());
  if (n < 3 || n > k) throw Error(ErrorCode::OutOfRange, "delta_n needs 3 <= n <= k");

  std::vector<Rational> diffs = pairwise_differences(pattern);
  DeltaNResult best;
  best.delta = Rational(0);
  bool found = false;
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    for (std::size_t j = i + static_cast<std::size_t>(n) - 1; j < y.size(); ++j) {
      FixedEndpointBest fb = best_min_gap_subset(pattern, i, j, n, diffs);
      if (fb.indices.empty()) continue;
      Rational ratio = fb.gap / (y[i] - y[j]);
      if (!found || ratio > best.delta) {
        best.delta = ratio;
        best.witness = pattern.subset(fb.indices);
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorCode::OutOfRange, "no size-n subset exists");
  return best;
}

}  // namespace erdos
