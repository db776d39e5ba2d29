#pragma once

#include <unordered_set>
#include <vector>

#include "streamsub/matchoid.hpp"
#include "streamsub/rational.hpp"
#include "streamsub/solution_state.hpp"
#include "streamsub/stream_algo.hpp"

namespace streamsub {

// Acceptance threshold (alpha) and exchange slack (beta).  beta_infinite is
// reserved for the cardinality specialization, which never exchanges; the
// general algorithm rejects it.
struct GreedyParams {
  Rat alpha = 0;
  Rat beta = 1;
  bool beta_infinite = false;
};

// One delivery decision, for replay and trace-equality checks.
struct TraceEvent {
  ElemId id;
  bool accepted;
  IdVec cands;
  bool operator==(const TraceEvent&) const = default;
};

// Result of the (pure) acceptance test for one element.
struct AcceptTest {
  bool good = false;
  IdVec cands;
  Val margin = 0;  // f_S(e) against the full current solution
};

// Single-pass exchange greedy.  Per element: find the cheapest displaceable
// member in each violated matroid, then accept iff the marginal beats
// alpha + (1+beta) times the displaced incremental value.  Accepting swaps
// the candidates out and the element in.
class StreamingGreedy : public StreamAlgo {
 public:
  StreamingGreedy(const Matchoid& m, const InstrumentedOracle& oracle,
                  GreedyParams params, TieBreak tie = TieBreak::prefer_earliest);

  // Decision only; no state change.  One oracle evaluation.
  AcceptTest test(ElemId e) const;

  // Applies a passing test (InternalError on a failing one -- callers that
  // re-test a buffered element use this as their acceptance assertion).
  void commit(ElemId e, const AcceptTest& t);

  // Declares e delivered-and-rejected; records the trace event.
  void record_reject(ElemId e, IdVec cands);

  void process(ElemId e) override;
  Outcome finish() override;
  std::size_t retained_elements() const override { return state_.size(); }
  std::size_t taken_count() const override { return state_.taken_log().size(); }
  std::uint64_t identity_checks() const override {
    return state_.identity_checks();
  }

  const SolutionState& state() const { return state_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }
  const GreedyParams& params() const { return params_; }
  const Matchoid& matchoid() const { return *m_; }

 private:
  void mark_delivered(ElemId e);

  const Matchoid* m_;
  const InstrumentedOracle* oracle_;
  GreedyParams params_;
  TieBreak tie_;
  SolutionState state_;
  std::vector<TraceEvent> trace_;
  std::unordered_set<ElemId> delivered_;
  bool finished_ = false;
};

}  // namespace streamsub
