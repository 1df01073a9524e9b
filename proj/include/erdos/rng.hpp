#pragma once

#include <cstdint>

#include "erdos/rational.hpp"

namespace erdos {

// SplitMix64 (Steele, Lea, Vigna): fixed, platform-independent stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Per-(seed, trial) deterministic stream, independent of evaluation order.
// Bernoulli draws compare a 64-bit uniform against q exactly; the only bias
// is the 2^-64 quantization of the uniform, recorded in certificates.
class TrialStream {
 public:
  static TrialStream make(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64() { return generator_.next(); }
  bool bernoulli(const Rational& q);
  // lo + (hi - lo) * U/2^64, exact rational
  Rational uniform(const Rational& lo, const Rational& hi);

 private:
  explicit TrialStream(std::uint64_t state) : generator_(state) {}
  SplitMix64 generator_;
};

}  // namespace erdos
