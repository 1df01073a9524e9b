#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "erdos/errors.hpp"
#include "test_helpers.hpp"

using namespace erdos;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/erdos_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("geometric generation") {
  GenParams params;
  params.ratio = parse_rational("1/2");
  Pattern p = generate(Family::Geometric, params, 4);
  REQUIRE(p.k() == 4);
  CHECK(p.points[0] == 1);
  CHECK(p.points[1] == parse_rational("1/2"));
  CHECK(p.points[2] == parse_rational("1/4"));
  CHECK(p.points[3] == parse_rational("1/8"));
  for (std::size_t i = 0; i + 1 < p.k(); ++i)
    CHECK(p.points[i + 1] / p.points[i] == parse_rational("1/2"));

  params.ratio = parse_rational("3/2");
  CHECK_THROWS_AS(generate(Family::Geometric, params, 3), Error);
}

TEST_CASE("cluster generation") {
  GenParams params;
  params.count = 5;
  Pattern p = generate(Family::Cluster, params, 1);
  REQUIRE(p.k() == 5);
  CHECK(p.points[0] == 1);
  CHECK(p.points[1] == parse_rational("3/4"));
  CHECK(p.points[4] == 0);
  CHECK(p.min_gap() == parse_rational("1/4"));
  CHECK(p.max_gap() == parse_rational("1/4"));
}

TEST_CASE("integers generation") {
  GenParams params;
  params.lo = Rational(-5);
  params.hi = Rational(5);
  Pattern p = generate(Family::Integers, params, 1);
  REQUIRE(p.k() == 11);
  CHECK(p.points.front() == 5);
  CHECK(p.points.back() == -5);
  CHECK(p.min_gap() == 1);
}

TEST_CASE("example5 generation follows the block rules") {
  GenParams params;
  params.anchors = {Rational(1), parse_rational("1/4"), parse_rational("1/16")};
  Pattern p = generate(Family::Example5, params, 2);
  // stage 1 block: 3 points at gap eps_1, largest power of two below 3/16 = 1/8
  Rational eps1 = parse_rational("1/8");
  CHECK(p.points[2] == 1);  // anchor is lowest of its (upward) block
  CHECK(p.points[1] == 1 + eps1);
  CHECK(p.points[0] == 1 + 2 * eps1);
  // stage 2 block: 5 points starting at 1/4 with gap below (1/4-1/16)/16 = 3/256
  Rational eps2 = parse_rational("1/128");
  REQUIRE(p.k() == 3 + 5);
  CHECK(p.points[7] == parse_rational("1/4"));
  CHECK(p.points[3] == parse_rational("1/4") + 4 * eps2);

  // block k is relatively 1/(2k)-fine: gap / block span = eps/(2k eps)
  Pattern block1 = make_pattern({p.points[0], p.points[1], p.points[2]});
  CHECK(block1.max_gap() / block1.span() == parse_rational("1/2"));
  Pattern block2 = make_pattern({p.points[3], p.points[4], p.points[5], p.points[6], p.points[7]});
  CHECK(block2.max_gap() / block2.span() == parse_rational("1/4"));

  // explicit gap must respect the bound
  params.block_gaps = {parse_rational("3/16")};
  CHECK_THROWS_AS(generate(Family::Example5, params, 1), Error);
  params.block_gaps = {parse_rational("1/8")};
  CHECK_NOTHROW(generate(Family::Example5, params, 1));

  // downward blocks stay below the anchor
  params.block_gaps.clear();
  params.block_up = false;
  Pattern down = generate(Family::Example5, params, 1);
  CHECK(down.points[0] == 1);
  CHECK(down.points[2] == 1 - 2 * eps1);
}

TEST_CASE("example6 blocks are fine near each base") {
  GenParams params;
  params.bases = {Rational(2), Rational(8)};
  Pattern p = generate(Family::Example6, params, 2);
  CHECK(p.points.front() == 8);
  // block widths stay within 1, so all points of block 2 are in [7, 8]
  long in_top = 0;
  for (const auto& y : p.points)
    if (y >= 7) ++in_top;
  CHECK(in_top >= 2);
  p.validate();
}

TEST_CASE("power generation approximates k^alpha within the denominator bound") {
  GenParams params;
  params.alpha = parse_rational("1/2");
  Pattern p = generate(Family::Power, params, 6);
  REQUIRE(p.k() == 6);
  CHECK(p.points.back() == 1);
  for (int k = 1; k <= 6; ++k) {
    double expect = std::sqrt(static_cast<double>(k));
    double got = rat_double(p.points[static_cast<std::size_t>(6 - k)]);
    CHECK(std::abs(got - expect) < 1e-8);
    CHECK(p.points[static_cast<std::size_t>(6 - k)].get_den() <= BigInt(1) << 32);
  }
}

TEST_CASE("load_pattern text format") {
  std::string path = write_temp("pat1.txt", "# comment\n1\n1/2\n0\n");
  Pattern p = load_pattern(path);
  REQUIRE(p.k() == 3);
  CHECK(p.points[0] == 1);
  CHECK(p.points[1] == parse_rational("1/2"));
  CHECK(p.points[2] == 0);

  std::string dup = write_temp("pat2.txt", "1\n1\n");
  CHECK_THROWS_AS(load_pattern(dup), Error);
  std::string dup2 = write_temp("pat3.txt", "3/6\n1/2\n");
  CHECK_THROWS_AS(load_pattern(dup2), Error);
  std::string empty = write_temp("pat4.txt", "# nothing\n");
  CHECK_THROWS_AS(load_pattern(empty), Error);
  std::string bad = write_temp("pat5.txt", "1\nx\n");
  CHECK_THROWS_AS(load_pattern(bad), Error);
}

TEST_CASE("pattern json round trip") {
  GenParams params;
  params.ratio = parse_rational("2/3");
  Pattern p = generate(Family::Geometric, params, 5);
  std::string path = "/tmp/erdos_test_pat_roundtrip.json";
  save_pattern(p, path);
  Pattern q = load_pattern(path);
  CHECK(q.points == p.points);
  CHECK(q.family == p.family);
  CHECK(q.stage == p.stage);
  CHECK(q.to_json().dump() == p.to_json().dump());
}

TEST_CASE("generate is deterministic") {
  GenParams params;
  params.ratio = parse_rational("1/3");
  Pattern a = generate(Family::Geometric, params, 7);
  Pattern b = generate(Family::Geometric, params, 7);
  CHECK(a.points == b.points);
}

TEST_CASE("pattern helpers") {
  Pattern p = make_pattern({Rational(1), parse_rational("1/2"), Rational(0)});
  CHECK(p.span() == 1);
  CHECK(p.max_abs() == 1);
  CHECK(p.tail(1).points == std::vector<Rational>{parse_rational("1/2"), Rational(0)});
  Pattern scaled = p.scaled(Rational(-2));
  CHECK(scaled.points.front() == 0);
  CHECK(scaled.points.back() == -2);
  CHECK_THROWS_AS(p.tail(3), Error);
  CHECK_THROWS_AS(make_pattern({}), Error);
}
