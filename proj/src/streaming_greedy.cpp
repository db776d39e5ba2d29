#include "streamsub/streaming_greedy.hpp"

#include <string>

#include "streamsub/errors.hpp"

namespace streamsub {

StreamingGreedy::StreamingGreedy(const Matchoid& m,
                                 const InstrumentedOracle& oracle,
                                 GreedyParams params, TieBreak tie)
    : m_(&m), oracle_(&oracle), params_(params), tie_(tie), state_(oracle) {
  if (params_.beta_infinite)
    throw PreconditionError(
        "streaming greedy: infinite beta belongs to the cardinality "
        "specialization");
  if (params_.alpha < 0 || params_.beta < 0)
    throw PreconditionError("streaming greedy: alpha and beta must be >= 0");
}

AcceptTest StreamingGreedy::test(ElemId e) const {
  AcceptTest out;
  out.cands = m_->exchange_candidates(
      state_.members(), [this](ElemId x) { return state_.nu(x); }, e, tie_);
  IdVec with = state_.members();
  with.push_back(e);
  out.margin = oracle_->eval(with) - state_.value();
  const Rat threshold =
      params_.alpha + (Rat(1) + params_.beta) * Rat(state_.nu_sum(out.cands));
  out.good = Rat(out.margin) >= threshold;
  return out;
}

void StreamingGreedy::commit(ElemId e, const AcceptTest& t) {
  mark_delivered(e);
  if (!t.good)
    throw InternalError("commit: element " + std::to_string(e) +
                        " failed its acceptance test");
  const Val displaced_nu = state_.nu_sum(t.cands);
  const Val delta = state_.apply_exchange(
      e, t.cands,
      t.cands.empty() ? std::optional<Val>(state_.value() + t.margin)
                      : std::nullopt);
  // Gain must cover alpha plus beta times the displaced incremental value;
  // anything less means the bookkeeping or the oracle went wrong.
  if (Rat(delta) < params_.alpha + params_.beta * Rat(displaced_nu))
    throw InternalError("commit: gain " + std::to_string(delta) +
                        " below its guaranteed floor");
  for (ElemId x : state_.members())
    if (state_.nu(x) < 0)
      throw InternalError("commit: negative incremental value for member " +
                          std::to_string(x));
  if (!m_->independent(state_.members()))
    throw OracleError(
        "commit: solution dependent after exchange; matroid oracle is "
        "inconsistent");
  if (state_.size() > static_cast<std::size_t>(m_->k()))
    throw OracleError("commit: solution larger than declared rank bound k=" +
                      std::to_string(m_->k()));
  trace_.push_back({e, true, t.cands});
}

void StreamingGreedy::record_reject(ElemId e, IdVec cands) {
  mark_delivered(e);
  trace_.push_back({e, false, std::move(cands)});
}

void StreamingGreedy::process(ElemId e) {
  AcceptTest t = test(e);
  if (t.good)
    commit(e, t);
  else
    record_reject(e, std::move(t.cands));
}

Outcome StreamingGreedy::finish() {
  if (finished_) throw ProtocolError("finish called twice");
  finished_ = true;
  return {sorted_copy(state_.members()), state_.value()};
}

void StreamingGreedy::mark_delivered(ElemId e) {
  if (finished_) throw ProtocolError("stream already closed");
  if (!delivered_.insert(e).second)
    throw ProtocolError("element " + std::to_string(e) +
                        " delivered twice to one instance");
}

}  // namespace streamsub
