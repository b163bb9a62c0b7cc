#pragma once

#include <cstdint>
#include <random>

namespace sepalg {

/// Deterministic source for randomized searches. Every randomized routine
/// draws integer coefficients from an expanding window {-B..B}, B doubling
/// per round, so identical seeds reproduce identical search traces.
class SearchRng {
public:
  explicit SearchRng(std::uint64_t seed = 42) : gen_(seed) {}

  long draw(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

  /// Coefficient in {-B..B} for round r (B = 2^r).
  long window_coeff(int round) {
    long b = 1L << round;
    return draw(-b, b);
  }

  std::uint64_t raw() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

struct SearchBudget {
  int rounds = 8;            // expanding-window rounds
  int draws_per_round = 24;  // attempts per round
};

}  // namespace sepalg
