#include "streamsub/iterated.hpp"

#include "streamsub/errors.hpp"

namespace streamsub {

IteratedGreedy::IteratedGreedy(const Matchoid& m,
                               const InstrumentedOracle& oracle,
                               GreedyParams first_params, OfflineFn offline,
                               TieBreak tie)
    : first_(m, oracle, first_params, tie),
      second_(m, oracle, GreedyParams{Rat(0), first_params.beta, false}, tie),
      offline_(std::move(offline)) {}

void IteratedGreedy::process(ElemId e) {
  AcceptTest t = first_.test(e);
  if (t.good) {
    first_.commit(e, t);  // e joins the first taken set, second never sees it
  } else {
    first_.record_reject(e, std::move(t.cands));
    second_.process(e);
  }
}

Outcome IteratedGreedy::finish() {
  if (finished_) throw ProtocolError("finish called twice");
  finished_ = true;
  IdVec taken_first = first_.state().taken_ids();
  Outcome one = first_.finish();
  Outcome two = second_.finish();
  OfflineResult three = offline_(taken_first);
  winner_ = 1;
  Outcome best = one;
  if (two.value > best.value) {
    winner_ = 2;
    best = two;
  }
  if (three.value > best.value) {
    winner_ = 3;
    best = {three.ids, three.value};
  }
  return best;
}

}  // namespace streamsub
