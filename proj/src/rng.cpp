#include "streamsub/rng.hpp"

#include "streamsub/errors.hpp"

namespace streamsub {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_id) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream_id * 0x9e3779b97f4a7c15ULL + 1));
}

std::uint64_t mix_rat(const Rat& r) {
  // FNV-1a over the canonical decimal rendering; exact rationals are already
  // normalized, so equal values hash equal.
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : rat_to_string(r)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw PreconditionError("Rng::index: empty range");
  if (n == 1) return 0;
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw > limit);
  return static_cast<std::size_t>(draw % span);
}

long long Rng::range(long long lo, long long hi) {
  if (lo > hi) throw PreconditionError("Rng::range: lo > hi");
  return lo + static_cast<long long>(
                  index(static_cast<std::size_t>(hi - lo) + 1));
}

}  // namespace streamsub
