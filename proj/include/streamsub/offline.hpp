#pragma once

#include <cstdint>
#include <functional>

#include "streamsub/matchoid.hpp"
#include "streamsub/oracle.hpp"
#include "streamsub/types.hpp"

namespace streamsub {

struct OfflineResult {
  IdVec ids;  // sorted
  Val value = 0;
};

// Post-stream black box bound to a constraint and an oracle; callers hand it
// the ground set to optimize over (a buffer, a taken set, or everything).
using OfflineFn = std::function<OfflineResult(const IdVec& ground)>;

// Plain greedy: repeatedly add the feasible element of largest positive
// marginal (ties: smallest id) until none improves.
OfflineResult offline_greedy(const InstrumentedOracle& oracle, const Matchoid& m,
                             const IdVec& ground);

// Randomized greedy: k rounds; each round draws uniformly over k slots filled
// by the top positive-marginal feasible elements (short rounds leave empty
// slots, and drawing one adds nothing).  Runs `repeats` times with derived
// sub-seeds and keeps the best run.
OfflineResult offline_random_greedy(const InstrumentedOracle& oracle,
                                    const Matchoid& m, const IdVec& ground,
                                    std::uint64_t seed, int repeats = 1);

// Exact optimum by depth-first enumeration of independent sets only
// (dependence prunes the whole subtree, which downward closure justifies).
// Ties break to the lexicographically smallest sorted id-set.  LimitError
// past `limit` ground elements.
OfflineResult exact_bruteforce(const InstrumentedOracle& oracle,
                               const Matchoid& m, const IdVec& ground,
                               std::size_t limit = 16);

}  // namespace streamsub
