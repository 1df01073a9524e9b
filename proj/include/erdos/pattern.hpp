#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "erdos/rational.hpp"

namespace erdos {

using Json = nlohmann::ordered_json;

enum class Family { Geometric, Power, Example5, Example6, Cluster, Integers, Custom };

const char* family_name(Family family);
Family family_from_name(const std::string& name);

struct GenParams {
  std::optional<Rational> ratio;           // geometric: ratio in (0,1)
  std::optional<Rational> alpha;           // power: exponent in (0,1)
  long denom_bound_log2 = 32;              // power: approximation denominator bound
  std::optional<Rational> lo, hi;          // cluster / integers interval
  std::optional<long> count;               // cluster point count (defaults to stage)
  std::vector<Rational> anchors;           // example5: decreasing positive anchors
  std::vector<Rational> block_gaps;        // example5: optional explicit gap per block
  bool block_up = true;                    // example5: block direction from each anchor
  std::vector<Rational> bases;             // example6: increasing positive bases

  Json to_json() const;
};

// Finite pattern y_1 > y_2 > ... > y_k (k >= 1), stored descending.
struct Pattern {
  std::vector<Rational> points;
  Family family = Family::Custom;
  Json params = Json::object();
  int stage = 0;

  std::size_t k() const { return points.size(); }
  Rational span() const;                   // y_1 - y_k (0 for k = 1)
  Rational max_abs() const;
  Rational max_gap() const;                // k >= 2
  Rational min_gap() const;                // k >= 2
  // Validates strict decrease and k >= 1; throws EmptyPattern / BadParams.
  void validate() const;

  Pattern translated(const Rational& shift) const;
  Pattern scaled(const Rational& factor) const;  // factor != 0; re-sorted descending
  // The pattern with the first `drop` (largest) elements removed.
  Pattern tail(std::size_t drop) const;
  // Subpattern by ascending index list into the descending point array.
  Pattern subset(const std::vector<std::size_t>& indices) const;

  Json to_json() const;
  static Pattern from_json(const Json& j);
};

Pattern make_pattern(std::vector<Rational> points, Family family = Family::Custom,
                     Json params = Json::object(), int stage = 0);

Pattern generate(Family family, const GenParams& params, int stage);

// Text file (one rational per line, '#' comments) or pattern JSON.
Pattern load_pattern(const std::string& path);
void save_pattern(const Pattern& pattern, const std::string& path);

}  // namespace erdos
