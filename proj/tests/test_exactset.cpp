#include <doctest.h>

#include "erdos/errors.hpp"
#include "test_helpers.hpp"

using namespace erdos;
using erdos::testing::Gen;

namespace {

IntervalSet make(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<Interval> raw;
  for (const auto& [lo, hi] : pairs) raw.push_back({parse_rational(lo), parse_rational(hi)});
  return IntervalSet::normalized(std::move(raw));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_str(parse_rational("3/6")) == "1/2");
  CHECK(rat_str(parse_rational("-4/8")) == "-1/2");
  CHECK(rat_str(parse_rational(" 7 ")) == "7");
  CHECK(rat_str(parse_rational("+2/3")) == "2/3");
  CHECK(parse_rational("3/6") == parse_rational("1/2"));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(rat_floor(parse_rational("-3/2")) == -2);
  CHECK(rat_ceil(parse_rational("-3/2")) == -1);
  CHECK(rat_pow(parse_rational("2/3"), 3) == parse_rational("8/27"));
  CHECK(rat_pow2(-3) == parse_rational("1/8"));
  CHECK(largest_pow2_below(parse_rational("3/16")) == parse_rational("1/8"));
  CHECK(largest_pow2_below(Rational(1)) == parse_rational("1/2"));
  CHECK(largest_pow2_below(Rational(5)) == Rational(4));
}

TEST_CASE("normalize canonicalizes") {
  CHECK(make({{"0", "1"}, {"1/2", "2"}}) == make({{"0", "2"}}));
  CHECK(make({{"3", "4"}, {"1", "2"}}).parts().size() == 2);
  CHECK(make({{"3", "4"}, {"1", "2"}}).parts()[0].lo == 1);
  CHECK(make({{"0", "0"}, {"0", "1"}}) == make({{"0", "1"}}));
  CHECK(make({{"0", "1"}, {"1", "2"}}) == make({{"0", "2"}}));  // adjacent merge
  CHECK(make({{"5", "5"}}).measure() == 0);
  CHECK(make({{"5", "5"}}).parts().size() == 1);
  CHECK_THROWS_AS(IntervalSet::normalized({{Rational(1), Rational(0)}}), Error);
}

TEST_CASE("measure examples") {
  CHECK(make({{"1", "2"}, {"3", "4"}}).measure() == 2);
  CHECK(IntervalSet().measure() == 0);
  CHECK(make({{"0", "1/3"}, {"1/2", "5/6"}}).measure() == parse_rational("2/3"));
}

TEST_CASE("affine image examples") {
  CHECK(make({{"0", "1"}}).affine(Rational(2), Rational(3)) == make({{"2", "5"}}));
  CHECK(make({{"0", "1"}}).affine(Rational(0), Rational(-1)) == make({{"-1", "0"}}));
  CHECK(make({{"1", "2"}, {"3", "4"}}).affine(Rational(0), parse_rational("1/2")) ==
        make({{"1/2", "1"}, {"3/2", "2"}}));
  CHECK_THROWS_AS(make({{"0", "1"}}).affine(Rational(1), Rational(0)), Error);
}

TEST_CASE("boolean op examples") {
  CHECK(set_union(make({{"0", "1"}}), make({{"2", "3"}})).parts().size() == 2);
  CHECK(set_intersect(make({{"0", "2"}}), make({{"1", "3"}})) == make({{"1", "2"}}));
  CHECK(set_subtract(make({{"0", "1"}}), make({{"1/4", "1/2"}})) ==
        make({{"0", "1/4"}, {"1/2", "1"}}));
  CHECK(set_subtract(make({{"0", "1"}}), make({{"0", "1"}})).empty());
  CHECK(set_subtract(make({{"0", "1"}}), make({{"-1", "0"}})) == make({{"0", "1"}}));
  // touching components intersect in a degenerate point
  CHECK(set_intersect(make({{"0", "1"}}), make({{"1", "2"}})) == make({{"1", "1"}}));
  // removing an interior point is invisible under closure semantics
  CHECK(set_subtract(make({{"0", "1"}}), make({{"1/2", "1/2"}})) == make({{"0", "1"}}));
}

TEST_CASE("containment") {
  CHECK(make({{"0", "1"}}).contains(make({{"1/4", "1/2"}})));
  CHECK(make({{"0", "1"}}).contains(make({{"0", "1"}})));
  CHECK_FALSE(make({{"0", "1/4"}, {"3/4", "1"}}).contains(make({{"0", "1"}})));
  CHECK(make({{"0", "1"}}).contains_point(parse_rational("1")));
  CHECK_FALSE(make({{"0", "1"}}).contains_point(parse_rational("9/8")));
}

TEST_CASE("property: normalize idempotent and measure-preserving") {
  Gen gen(2024);
  for (int iter = 0; iter < 300; ++iter) {
    IntervalSet s = gen.interval_set(5);
    IntervalSet renorm = IntervalSet::normalized(
        std::vector<Interval>(s.parts().begin(), s.parts().end()));
    CHECK(renorm == s);
    CHECK(renorm.measure() == s.measure());
  }
}

TEST_CASE("property: affine scales measure by |beta| exactly") {
  Gen gen(77);
  for (int iter = 0; iter < 300; ++iter) {
    IntervalSet s = gen.interval_set(5);
    Rational alpha = gen.rational();
    Rational beta = gen.rational();
    if (beta == 0) beta = 1;
    IntervalSet image = s.affine(alpha, beta);
    CHECK(image.measure() == rat_abs(beta) * s.measure());
    // round trip
    CHECK(image.affine(-alpha / beta, Rational(1) / beta) == s);
  }
}

TEST_CASE("property: inclusion-exclusion exact; point-sampling oracle agrees") {
  Gen gen(4242);
  for (int iter = 0; iter < 200; ++iter) {
    IntervalSet s = gen.interval_set(4, 6, 4);
    IntervalSet t = gen.interval_set(4, 6, 4);
    IntervalSet u = set_union(s, t);
    IntervalSet i = set_intersect(s, t);
    IntervalSet d = set_subtract(s, t);
    CHECK(u.measure() == s.measure() + t.measure() - i.measure());
    CHECK(d.measure() == s.measure() - i.measure());
    CHECK(u.measure() <= s.measure() + t.measure());

    // fine rational grid over the touched range
    for (long step = -60; step <= 60; ++step) {
      Rational x = make_rational(step, 7);
      bool in_s = s.contains_point(x), in_t = t.contains_point(x);
      CHECK(u.contains_point(x) == (in_s || in_t));
      CHECK(i.contains_point(x) == (in_s && in_t));
      if (in_s && !in_t) CHECK(d.contains_point(x));
      if (d.contains_point(x)) CHECK(in_s);
    }
  }
}
