#pragma once

#include <cstdint>
#include <unordered_set>

#include "streamsub/offline.hpp"
#include "streamsub/rng.hpp"
#include "streamsub/streaming_greedy.hpp"

namespace streamsub {

// Buffered randomized wrapper around the exchange greedy.  Arrivals that pass
// the acceptance predicate wait in a buffer of capacity K; a full buffer
// releases one uniformly random element into the inner greedy (whose
// acceptance is re-tested and asserted), after which survivors are
// re-filtered in insertion order and failures are evicted for good.  After
// the stream, an offline solver over the remaining buffer competes with the
// streamed solution.  K = 1 is exactly the deterministic greedy.
class RandomizedGreedy : public StreamAlgo {
 public:
  RandomizedGreedy(const Matchoid& m, const InstrumentedOracle& oracle,
                   GreedyParams params, std::size_t capacity, std::uint64_t seed,
                   OfflineFn offline, TieBreak tie = TieBreak::prefer_earliest);

  void process(ElemId e) override;
  Outcome finish() override;
  std::size_t retained_elements() const override {
    return inner_.retained_elements() + buffer_.size();
  }
  std::size_t taken_count() const override { return inner_.taken_count(); }
  std::uint64_t identity_checks() const override {
    return inner_.identity_checks();
  }

  const StreamingGreedy& inner() const { return inner_; }
  const IdVec& buffer() const { return buffer_; }
  std::size_t buffer_peak() const { return buffer_peak_; }
  std::size_t selections() const { return selections_; }
  bool final_from_offline() const { return final_from_offline_; }

 private:
  StreamingGreedy inner_;
  const InstrumentedOracle* oracle_;
  std::size_t capacity_;
  Rng rng_;
  OfflineFn offline_;
  IdVec buffer_;
  std::size_t buffer_peak_ = 0;
  std::size_t selections_ = 0;
  std::unordered_set<ElemId> arrived_;
  bool finished_ = false;
  bool final_from_offline_ = false;
};

// Cardinality-only specialization (single uniform matroid): admission wants a
// strictly-above-alpha marginal while the solution is short of rank k, the
// released element joins the solution unconditionally (its margin re-checked
// as an assertion -- refiltering keeps the whole buffer currently good), and
// nothing is ever exchanged out.
class CardinalityRandomized : public StreamAlgo {
 public:
  CardinalityRandomized(const Matchoid& m, const InstrumentedOracle& oracle,
                        Rat alpha, std::size_t capacity, std::uint64_t seed,
                        OfflineFn offline);

  void process(ElemId e) override;
  Outcome finish() override;
  std::size_t retained_elements() const override {
    return state_.size() + buffer_.size();
  }
  std::size_t taken_count() const override { return state_.taken_log().size(); }
  std::uint64_t identity_checks() const override {
    return state_.identity_checks();
  }

  const SolutionState& state() const { return state_; }
  const IdVec& buffer() const { return buffer_; }
  std::size_t buffer_peak() const { return buffer_peak_; }
  std::size_t selections() const { return selections_; }
  bool final_from_offline() const { return final_from_offline_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }

 private:
  Val margin_of(ElemId e) const;

  const Matchoid* m_;
  const InstrumentedOracle* oracle_;
  Rat alpha_;
  std::size_t rank_;
  std::size_t capacity_;
  Rng rng_;
  OfflineFn offline_;
  SolutionState state_;
  IdVec buffer_;
  std::vector<TraceEvent> trace_;
  std::size_t buffer_peak_ = 0;
  std::size_t selections_ = 0;
  std::unordered_set<ElemId> arrived_;
  bool finished_ = false;
  bool final_from_offline_ = false;
};

}  // namespace streamsub
