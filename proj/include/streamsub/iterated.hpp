#pragma once

#include "streamsub/offline.hpp"
#include "streamsub/streaming_greedy.hpp"

namespace streamsub {

// Two chained greedy instances in one pass: the first runs at the given
// alpha; every element it rejects outright flows straight into a second
// instance running at alpha = 0 (same beta).  Elements the first instance
// ever accepted -- its taken set -- are withheld from the second and handed
// to an offline solver at the end.  The best of the three solutions wins
// (ties in that order).  Deterministic whenever the offline solver is.
class IteratedGreedy : public StreamAlgo {
 public:
  IteratedGreedy(const Matchoid& m, const InstrumentedOracle& oracle,
                 GreedyParams first_params, OfflineFn offline,
                 TieBreak tie = TieBreak::prefer_earliest);

  void process(ElemId e) override;
  Outcome finish() override;
  std::size_t retained_elements() const override {
    // First-phase taken ids are genuinely retained for the offline stage.
    return first_.retained_elements() + second_.retained_elements() +
           first_.taken_count();
  }
  std::size_t taken_count() const override { return first_.taken_count(); }
  std::uint64_t identity_checks() const override {
    return first_.identity_checks() + second_.identity_checks();
  }

  const StreamingGreedy& first() const { return first_; }
  const StreamingGreedy& second() const { return second_; }
  // Which of the three solutions the final answer came from.
  int winner() const { return winner_; }

 private:
  StreamingGreedy first_;
  StreamingGreedy second_;
  OfflineFn offline_;
  bool finished_ = false;
  int winner_ = 0;
};

}  // namespace streamsub
