#include "streamsub/randomized.hpp"

#include <string>

#include "streamsub/errors.hpp"

namespace streamsub {

RandomizedGreedy::RandomizedGreedy(const Matchoid& m,
                                   const InstrumentedOracle& oracle,
                                   GreedyParams params, std::size_t capacity,
                                   std::uint64_t seed, OfflineFn offline,
                                   TieBreak tie)
    : inner_(m, oracle, params, tie),
      oracle_(&oracle),
      capacity_(capacity),
      rng_(seed),
      offline_(std::move(offline)) {
  if (capacity_ == 0)
    throw PreconditionError("randomized greedy: buffer capacity must be >= 1");
}

void RandomizedGreedy::process(ElemId e) {
  if (finished_) throw ProtocolError("stream already closed");
  if (!arrived_.insert(e).second)
    throw ProtocolError("element " + std::to_string(e) + " streamed twice");
  AcceptTest t = inner_.test(e);
  if (t.good) {
    buffer_.push_back(e);
    buffer_peak_ = std::max(buffer_peak_, buffer_.size());
  } else {
    inner_.record_reject(e, std::move(t.cands));
  }
  if (buffer_.size() < capacity_) return;

  const std::size_t pick = rng_.index(buffer_.size());
  const ElemId selected = buffer_[pick];
  buffer_.erase(buffer_.begin() + static_cast<long>(pick));
  // Fresh candidates at selection time; commit() asserts the re-test passes
  // (every buffered element is good against the current solution).
  inner_.commit(selected, inner_.test(selected));
  ++selections_;

  IdVec survivors;
  survivors.reserve(buffer_.size());
  for (ElemId b : buffer_) {  // insertion order
    AcceptTest rt = inner_.test(b);
    if (rt.good)
      survivors.push_back(b);
    else
      inner_.record_reject(b, std::move(rt.cands));  // evicted for good
  }
  buffer_ = std::move(survivors);
}

Outcome RandomizedGreedy::finish() {
  if (finished_) throw ProtocolError("finish called twice");
  finished_ = true;
  Outcome streamed = inner_.finish();
  OfflineResult off = offline_(buffer_);
  if (off.value > streamed.value) {
    final_from_offline_ = true;
    return {off.ids, off.value};
  }
  return streamed;
}

CardinalityRandomized::CardinalityRandomized(const Matchoid& m,
                                             const InstrumentedOracle& oracle,
                                             Rat alpha, std::size_t capacity,
                                             std::uint64_t seed,
                                             OfflineFn offline)
    : m_(&m),
      oracle_(&oracle),
      alpha_(std::move(alpha)),
      capacity_(capacity),
      rng_(seed),
      offline_(std::move(offline)),
      state_(oracle) {
  if (capacity_ == 0)
    throw PreconditionError("cardinality randomized: buffer capacity must be >= 1");
  if (alpha_ < 0)
    throw PreconditionError("cardinality randomized: alpha must be >= 0");
  const auto* uniform =
      m.num_matroids() == 1
          ? dynamic_cast<const UniformMatroid*>(&m.matroid(0))
          : nullptr;
  if (uniform == nullptr)
    throw PreconditionError(
        "cardinality randomized: constraint must be a single uniform matroid");
  rank_ = static_cast<std::size_t>(uniform->rank());
}

Val CardinalityRandomized::margin_of(ElemId e) const {
  IdVec with = state_.members();
  with.push_back(e);
  return oracle_->eval(with) - state_.value();
}

void CardinalityRandomized::process(ElemId e) {
  if (finished_) throw ProtocolError("stream already closed");
  if (!arrived_.insert(e).second)
    throw ProtocolError("element " + std::to_string(e) + " streamed twice");
  if (!m_->in_some_ground(e))
    throw UnknownElementError("cardinality randomized: element " +
                              std::to_string(e) + " outside the ground");
  // Admission stops for good once the solution reaches rank k.
  const bool good = state_.size() < rank_ && Rat(margin_of(e)) > alpha_;
  if (good) {
    buffer_.push_back(e);
    buffer_peak_ = std::max(buffer_peak_, buffer_.size());
  } else {
    trace_.push_back({e, false, {}});
  }
  if (buffer_.size() < capacity_) return;

  const std::size_t pick = rng_.index(buffer_.size());
  const ElemId selected = buffer_[pick];
  buffer_.erase(buffer_.begin() + static_cast<long>(pick));
  const Val gain = margin_of(selected);
  // Refiltering keeps the whole buffer strictly above alpha against the
  // current solution, so the released element must still clear it.
  if (!(Rat(gain) > alpha_))
    throw InternalError("selected buffer element no longer clears alpha");
  if (state_.size() >= rank_)
    throw InternalError("selection with a full solution");
  state_.apply_exchange(selected, {}, state_.value() + gain);
  trace_.push_back({selected, true, {}});
  ++selections_;
  for (ElemId x : state_.members())
    if (state_.nu(x) < 0)
      throw InternalError("negative incremental value for member " +
                          std::to_string(x));
  if (!m_->independent(state_.members()))
    throw OracleError("cardinality solution dependent; oracle inconsistent");

  IdVec survivors;
  survivors.reserve(buffer_.size());
  for (ElemId b : buffer_) {  // insertion order; eviction is permanent
    if (Rat(margin_of(b)) > alpha_)
      survivors.push_back(b);
    else
      trace_.push_back({b, false, {}});
  }
  buffer_ = std::move(survivors);
}

Outcome CardinalityRandomized::finish() {
  if (finished_) throw ProtocolError("finish called twice");
  finished_ = true;
  OfflineResult off = offline_(buffer_);
  if (off.value > state_.value()) {
    final_from_offline_ = true;
    return {off.ids, off.value};
  }
  return {sorted_copy(state_.members()), state_.value()};
}

}  // namespace streamsub
