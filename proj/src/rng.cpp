#include "erdos/rng.hpp"

namespace erdos {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TrialStream TrialStream::make(std::uint64_t seed, std::uint64_t trial) {
  // decorrelate the per-trial streams by running the trial index through
  // the same finalizer before mixing it into the seed
  SplitMix64 mixer(trial);
  std::uint64_t trial_key = mixer.next();
  return TrialStream(seed ^ trial_key);
}

bool TrialStream::bernoulli(const Rational& q) {
  std::uint64_t u = next_u64();
  // u / 2^64 < q  <=>  u * den(q) < num(q) * 2^64
  BigInt lhs(0);
  mpz_import(lhs.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  lhs *= q.get_den();
  BigInt rhs = q.get_num();
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), 64);
  return lhs < rhs;
}

Rational TrialStream::uniform(const Rational& lo, const Rational& hi) {
  std::uint64_t u = next_u64();
  BigInt num(0);
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  BigInt den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 64);
  return lo + (hi - lo) * make_rational(num, den);
}

}  // namespace erdos
