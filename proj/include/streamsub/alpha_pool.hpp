#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "streamsub/oracle.hpp"
#include "streamsub/rational.hpp"
#include "streamsub/stream_algo.hpp"

namespace streamsub {

// Geometric threshold grid.  Live thresholds are the exact powers base^i
// inside [low_coef * f(z), high_coef * f(z)], where z is the best singleton
// seen so far.  high_coef must be at least base * low_coef so the bracket
// always holds a power.
struct GridConfig {
  Rat base;
  Rat low_coef;
  Rat high_coef;
};

// Powers of two spanning [eps/(4k), eps/2] times f(z): the general-constraint
// bracket (a correct guess alpha with eps*OPT/(4k) <= alpha <= eps*OPT/(2k)
// always lands inside because f(z) <= OPT <= k*f(z)).
GridConfig matchoid_grid(const Rat& epsilon, int k);

// Powers of (1+eps) spanning [(1-eps)/(5k), (11/50)(1+eps)] times f(z): the
// cardinality bracket.  1/5 < 1/(2+e) < 11/50 plus f(z) <= OPT <= k*f(z)
// puts the whole target window [(1-eps), (1+eps)] * OPT/((2+e)k) inside the
// bracket, and the window is wide enough (ratio >= 1+eps) to contain a power.
GridConfig cardinality_grid(const Rat& epsilon, int k);

using InstanceFactory =
    std::function<std::unique_ptr<StreamAlgo>(const Rat& alpha,
                                              std::uint64_t sub_seed)>;

struct PoolInstanceRow {
  long exponent = 0;
  Rat alpha;
  Outcome outcome;
  std::size_t taken = 0;
};

struct PoolOutcome {
  bool any = false;  // false: grid stayed empty (no positive singleton)
  Outcome best;
  Rat best_alpha;
  std::vector<PoolInstanceRow> instances;
};

struct PoolStats {
  std::size_t live_peak = 0;
  std::size_t retained_peak = 0;
  std::size_t created = 0;
  std::size_t retired = 0;
  std::size_t killed = 0;
  // Accumulated across retired, killed, and surviving instances.
  std::uint64_t identity_checks = 0;
};

// Single-pass threshold pool.  Each step evaluates the arriving singleton,
// promotes z if it improved (retiring instances whose threshold fell below
// the new bracket and starting fresh ones for newly reachable powers), then
// broadcasts the element to every live instance.  Space is audited every
// step: live instances never exceed the bracket's power count, and retained
// ids never exceed that count times the per-instance budget (plus z itself).
// An instance whose taken set outgrows k*f(z)/alpha is killed eagerly; for a
// correct oracle that can never trip (per-accept gain >= alpha bounds the
// taken set by OPT/alpha <= k*f(z)/alpha), so it guards against broken ones.
class AlphaPool {
 public:
  AlphaPool(GridConfig grid, InstanceFactory factory,
            const InstrumentedOracle& oracle, std::uint64_t master_seed, int k,
            std::size_t per_instance_budget);

  void step(ElemId e);
  PoolOutcome finish();

  const PoolStats& stats() const { return stats_; }
  std::size_t live_count() const { return live_.size(); }
  std::size_t retained_total() const;
  std::size_t live_cap() const { return live_cap_; }
  bool has_z() const { return has_z_; }
  ElemId z() const { return z_; }
  Val z_value() const { return z_value_; }

 private:
  struct Entry {
    Rat alpha;
    std::unique_ptr<StreamAlgo> algo;
  };

  void refresh_grid();
  void audit();

  GridConfig grid_;
  InstanceFactory factory_;
  const InstrumentedOracle* oracle_;
  std::uint64_t master_seed_;
  int k_;
  std::size_t budget_;
  std::size_t live_cap_;
  std::map<long, Entry> live_;  // exponent -> instance, ascending
  bool has_z_ = false;
  ElemId z_ = 0;
  Val z_value_ = 0;
  PoolStats stats_;
  bool finished_ = false;
};

}  // namespace streamsub
