#include <doctest.h>

#include "erdos/analysis.hpp"
#include "erdos/errors.hpp"
#include "test_helpers.hpp"

using namespace erdos;
using erdos::testing::Gen;

namespace {

Pattern pat(std::initializer_list<const char*> points) {
  std::vector<Rational> pts;
  for (const char* p : points) pts.push_back(parse_rational(p));
  return make_pattern(pts);
}

// exhaustive n_delta oracle over all subsets (k <= 16)
long brute_n_delta(const Pattern& p, const Rational& delta) {
  const auto& y = p.points;
  const std::size_t k = y.size();
  long best = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<Rational> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(y[i]);
    if (sub.size() < 2) continue;
    Rational span = sub.front() - sub.back();
    bool ok = true;
    for (std::size_t i = 0; i + 1 < sub.size(); ++i)
      if (sub[i] - sub[i + 1] < delta * span) { ok = false; break; }
    if (ok) best = std::max(best, static_cast<long>(sub.size()));
  }
  return best;
}

Rational brute_delta_n(const Pattern& p, long n) {
  const auto& y = p.points;
  const std::size_t k = y.size();
  Rational best(0);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<Rational> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(y[i]);
    if (static_cast<long>(sub.size()) != n) continue;
    Rational span = sub.front() - sub.back();
    Rational min_gap = sub[0] - sub[1];
    for (std::size_t i = 0; i + 1 < sub.size(); ++i)
      min_gap = rat_min(min_gap, sub[i] - sub[i + 1]);
    best = rat_max(best, min_gap / span);
  }
  return best;
}

}  // namespace

TEST_CASE("fineness trivial examples") {
  FinenessReport r1 = fineness(pat({"1", "1/2", "0"}));
  CHECK(r1.rel_fineness == parse_rational("1/2"));
  CHECK(r1.rel_separation == parse_rational("1/2"));
  CHECK(r1.arf_score == 1);  // at (u,v) = (0,1): (1/2)/1 * (0+1+1)

  FinenessReport r2 = fineness(pat({"1", "3/4", "1/2", "1/4", "0"}));
  CHECK(r2.rel_fineness == parse_rational("1/4"));
  CHECK(r2.rel_separation == parse_rational("1/4"));

  CHECK_THROWS_AS(fineness(pat({"1"})), Error);
}

TEST_CASE("fineness pigeonhole invariant") {
  Gen gen(5150);
  for (int iter = 0; iter < 100; ++iter) {
    Pattern p = gen.pattern(2, 12);
    FinenessReport r = fineness(p);
    long k = static_cast<long>(p.k());
    CHECK(r.rel_separation > 0);
    CHECK(r.rel_separation <= r.rel_fineness);
    CHECK(r.rel_fineness <= 1);
    CHECK(r.rel_separation <= make_rational(1, k - 1));
    CHECK(r.rel_fineness >= make_rational(1, k - 1));
  }
}

TEST_CASE("ulf bound and lb ratio on integer truncation") {
  GenParams params;
  params.lo = Rational(-5);
  params.hi = Rational(5);
  Pattern p = generate(Family::Integers, params, 1);
  FinenessReport r = fineness(p);
  CHECK(r.ulf_bound == 2);
  CHECK(r.lb_ratio == 3);  // card([-1,1]) = 3 over n = 1
}

TEST_CASE("extract_separated_subset") {
  // 11 equally spaced points on [0,1], eps = 1/5
  std::vector<Rational> pts;
  for (int j = 10; j >= 0; --j) pts.push_back(make_rational(j, 10));
  Pattern p = make_pattern(pts);
  SeparatedSubset r = extract_separated_subset(p, parse_rational("1/5"));
  CHECK(r.subset.points.front() == 1);
  CHECK(r.subset.points.back() == 0);
  CHECK(r.min_gap_rel >= parse_rational("1/5"));
  CHECK(r.max_gap_rel <= parse_rational("3/5"));
  CHECK(r.three_eps_fine);
  // cardinality within [1/(3 eps) + 1, 1/eps + 1]
  long card = static_cast<long>(r.subset.k());
  CHECK(Rational(card) >= parse_rational("5/3") + 1);
  CHECK(Rational(card) <= Rational(5) + 1);

  SeparatedSubset two = extract_separated_subset(pat({"1", "0"}), Rational(1));
  CHECK(two.subset.k() == 2);
  SeparatedSubset exact = extract_separated_subset(pat({"1", "1/2", "0"}), parse_rational("1/2"));
  CHECK(exact.subset.k() == 3);

  CHECK_THROWS_AS(extract_separated_subset(pat({"1", "1/2", "0"}), parse_rational("1/4")), Error);
}

TEST_CASE("extract_separated_subset properties on random fine patterns") {
  Gen gen(99);
  for (int iter = 0; iter < 60; ++iter) {
    Pattern p = gen.pattern_unit(4, 20);
    Rational eps = fineness(p).rel_fineness;  // p is relatively eps-fine by definition
    if (eps > 1) continue;
    SeparatedSubset r = extract_separated_subset(p, eps);
    CHECK(r.subset.points.front() == p.points.front());
    CHECK(r.subset.points.back() == p.points.back());
    if (r.subset.k() >= 2) {
      CHECK(r.min_gap_rel >= eps);
      CHECK(r.three_eps_fine);  // Remark's claim, checked not assumed
    }
  }
}

TEST_CASE("n_delta examples") {
  Pattern p = pat({"1", "3/4", "1/2", "1/4", "0"});
  CHECK(n_delta(p, parse_rational("1/4")).count == 5);
  NDeltaResult r = n_delta(p, parse_rational("1/3"));
  CHECK(r.count == 4);
  // witness verifies its own ratio
  Rational span = r.witness.span();
  CHECK(r.witness.min_gap() >= parse_rational("1/3") * span);
  CHECK_THROWS_AS(n_delta(p, Rational(2)), Error);
  CHECK_THROWS_AS(n_delta(p, Rational(0)), Error);
}

TEST_CASE("delta_n examples") {
  Pattern p = pat({"1", "3/4", "1/2", "1/4", "0"});
  DeltaNResult r = delta_n(p, 5);
  CHECK(r.delta == parse_rational("1/4"));
  CHECK(r.witness.k() == 5);
  CHECK_THROWS_AS(delta_n(p, 2), Error);
  CHECK_THROWS_AS(delta_n(p, 6), Error);
}

TEST_CASE("n_delta and delta_n agree with brute force (k <= 10)") {
  Gen gen(31337);
  for (int iter = 0; iter < 40; ++iter) {
    Pattern p = gen.pattern(3, 10, 6, 4);
    Rational delta = make_rational(gen.pick(1, 4), 4);
    NDeltaResult fast = n_delta(p, delta);
    CHECK(fast.count == brute_n_delta(p, delta));
    // witness check
    Rational span = fast.witness.span();
    if (fast.witness.k() >= 2) CHECK(fast.witness.min_gap() >= delta * span);

    long n = gen.pick(3, static_cast<long>(p.k()));
    DeltaNResult dn = delta_n(p, n);
    CHECK(dn.delta == brute_delta_n(p, n));
    // duality
    CHECK(n_delta(p, dn.delta).count >= n);
  }
}

TEST_CASE("monotonicity of n_delta and delta_n") {
  Gen gen(8);
  for (int iter = 0; iter < 20; ++iter) {
    Pattern p = gen.pattern(4, 12);
    Rational d1 = make_rational(1, 5), d2 = make_rational(2, 5);
    CHECK(n_delta(p, d1).count >= n_delta(p, d2).count);
    if (p.k() >= 4) {
      CHECK(delta_n(p, 3).delta >= delta_n(p, 4).delta);
    }
  }
}
