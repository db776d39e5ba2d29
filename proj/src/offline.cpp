#include "streamsub/offline.hpp"

#include <algorithm>
#include <string>

#include "streamsub/errors.hpp"
#include "streamsub/rng.hpp"

namespace streamsub {

namespace {

// Feasible positive-marginal candidates, best first (marginal desc, id asc).
struct Cand {
  ElemId id;
  Val gain;
};

std::vector<Cand> ranked_candidates(const InstrumentedOracle& oracle,
                                    const Matchoid& m, const IdVec& ground,
                                    const IdVec& current, Val current_value) {
  std::vector<Cand> out;
  for (ElemId e : sorted_copy(ground)) {
    if (contains(current, e)) continue;
    IdVec with = current;
    with.push_back(e);
    if (!m.independent(with)) continue;
    Val gain = oracle.eval(with) - current_value;
    if (gain > 0) out.push_back({e, gain});
  }
  std::stable_sort(out.begin(), out.end(), [](const Cand& a, const Cand& b) {
    return a.gain != b.gain ? a.gain > b.gain : a.id < b.id;
  });
  return out;
}

}  // namespace

OfflineResult offline_greedy(const InstrumentedOracle& oracle, const Matchoid& m,
                             const IdVec& ground) {
  IdVec current;
  Val value = oracle.eval(current);
  while (true) {
    auto cands = ranked_candidates(oracle, m, ground, current, value);
    if (cands.empty()) break;
    current.push_back(cands.front().id);
    value += cands.front().gain;
  }
  return {sorted_copy(current), value};
}

OfflineResult offline_random_greedy(const InstrumentedOracle& oracle,
                                    const Matchoid& m, const IdVec& ground,
                                    std::uint64_t seed, int repeats) {
  if (repeats < 1) throw PreconditionError("offline_random_greedy: repeats < 1");
  const std::size_t k = static_cast<std::size_t>(m.k());
  OfflineResult best;
  bool have = false;
  for (int rep = 0; rep < repeats; ++rep) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));
    IdVec current;
    Val value = oracle.eval(current);
    for (std::size_t round = 0; round < k; ++round) {
      auto cands = ranked_candidates(oracle, m, ground, current, value);
      if (cands.empty()) break;
      // k slots; only the top candidates are real, the rest add nothing.
      std::size_t slot = rng.index(k);
      if (slot < cands.size()) {
        current.push_back(cands[slot].id);
        value += cands[slot].gain;
      }
    }
    if (!have || value > best.value) {
      best = {sorted_copy(current), value};
      have = true;
    }
  }
  return best;
}

OfflineResult exact_bruteforce(const InstrumentedOracle& oracle,
                               const Matchoid& m, const IdVec& ground,
                               std::size_t limit) {
  IdVec ids = sorted_copy(ground);
  if (ids.size() > limit)
    throw LimitError("exact_bruteforce: ground of " + std::to_string(ids.size()) +
                     " exceeds limit " + std::to_string(limit));
  OfflineResult best{{}, oracle.eval({})};
  IdVec current;
  auto consider = [&](const IdVec& s) {
    Val v = oracle.eval(s);
    IdVec canon = sorted_copy(s);
    if (v > best.value || (v == best.value && canon < best.ids))
      best = {canon, v};
  };
  // Depth-first over id order; a dependent extension closes its subtree.
  auto dfs = [&](auto&& self, std::size_t next) -> void {
    for (std::size_t i = next; i < ids.size(); ++i) {
      current.push_back(ids[i]);
      if (m.independent(current)) {
        consider(current);
        self(self, i + 1);
      }
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace streamsub
