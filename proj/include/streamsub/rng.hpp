#pragma once

#include <cstdint>
#include <random>

#include "streamsub/rational.hpp"

namespace streamsub {

// splitmix64 step (Steele/Lea/Flood).  Used only to derive sub-seeds, never
// as the sampling generator itself.
std::uint64_t splitmix64(std::uint64_t x);

// Sub-seed for a named child stream of `master` (trials, shuffles, per-alpha
// instances).  Distinct stream ids give statistically unrelated seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_id);

// 64-bit mix of an exact rational, for per-alpha sub-seed derivation.
std::uint64_t mix_rat(const Rat& r);

// Seeded generator with a portable bounded draw.  std::mt19937_64's output
// sequence is fixed by the standard; the bounded draw below is plain
// rejection sampling (draw 64 bits, discard the biased tail, reduce mod n),
// so identical seeds give identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform index in [0, n).  n == 1 returns 0 without consuming a draw.
  std::size_t index(std::size_t n);

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi);

 private:
  std::mt19937_64 gen_;
};

}  // namespace streamsub
