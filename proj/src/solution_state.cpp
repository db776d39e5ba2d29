#include "streamsub/solution_state.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "streamsub/errors.hpp"

namespace streamsub {

SolutionState::SolutionState(const InstrumentedOracle& oracle)
    : oracle_(&oracle), f_empty_(oracle.eval({})) {}

Val SolutionState::nu(ElemId e) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] == e) return nu_[i];
  throw PreconditionError("nu: element " + std::to_string(e) +
                          " is not a current member");
}

Val SolutionState::nu_sum(const IdVec& ids) const {
  Val total = 0;
  for (ElemId e : ids) total += nu(e);
  return total;
}

Val SolutionState::apply_exchange(ElemId e, const IdVec& cands,
                                  std::optional<Val> value_hint) {
  if (is_member(e))
    throw PreconditionError("apply_exchange: element " + std::to_string(e) +
                            " is already a member");
  if (value_hint && !cands.empty())
    throw PreconditionError("apply_exchange: value hint only valid without deletions");
  {
    IdVec dedup = sorted_copy(cands);
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
      throw PreconditionError("apply_exchange: duplicate candidates");
  }
  const Val old_value = value();

  // Exit values are the candidates' incremental values in the pre-state.
  for (ElemId c : cands) exit_log_.push_back({c, nu(c), e});

  if (!cands.empty()) {
    std::size_t first_removed = members_.size();
    for (ElemId c : cands) {
      for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i] == c) {
          first_removed = std::min(first_removed, i);
          break;
        }
    }
    std::map<ElemId, Val> old_nu;
    for (std::size_t i = first_removed; i < members_.size(); ++i)
      old_nu[members_[i]] = nu_[i];

    IdVec kept;
    kept.reserve(members_.size());
    for (ElemId m : members_)
      if (!contains(cands, m)) kept.push_back(m);
    members_ = std::move(kept);
    prefix_.resize(members_.size());
    nu_.resize(members_.size());

    // Survivors past the first deletion lost part of their prefix; one
    // evaluation per survivor refreshes the chain.
    IdVec prefix_set(members_.begin(),
                     members_.begin() + static_cast<long>(first_removed));
    for (std::size_t i = first_removed; i < members_.size(); ++i) {
      prefix_set.push_back(members_[i]);
      prefix_[i] = oracle_->eval(prefix_set);
      nu_[i] = prefix_[i] - (i == 0 ? f_empty_ : prefix_[i - 1]);
      if (nu_[i] < old_nu.at(members_[i]))
        throw OracleError(
            "incremental value of element " + std::to_string(members_[i]) +
            " shrank after a deletion; the oracle is not submodular");
    }
  }

  const Val before_append = value();
  Val new_total;
  if (value_hint) {
    new_total = *value_hint;
  } else {
    IdVec with = members_;
    with.push_back(e);
    new_total = oracle_->eval(with);
  }
  members_.push_back(e);
  prefix_.push_back(new_total);
  nu_.push_back(new_total - before_append);

  const Val delta = value() - old_value;
  taken_log_.push_back({e, delta, sorted_copy(cands)});
  check_identity();
  return delta;
}

IdVec SolutionState::taken_ids() const {
  IdVec out;
  out.reserve(taken_log_.size());
  for (const auto& t : taken_log_) out.push_back(t.id);
  return out;
}

Val SolutionState::exit_value_sum() const {
  Val total = 0;
  for (const auto& x : exit_log_) total += x.chi;
  return total;
}

void SolutionState::check_identity() {
  ++identity_checks_;
  Val total = 0;
  for (Val v : nu_) total += v;
  if (total != value() - f_empty_)
    throw InternalError("sum of incremental values (" + std::to_string(total) +
                        ") != f(S) - f(empty) (" +
                        std::to_string(value() - f_empty_) + ")");
}

Json SolutionState::logs_to_json() const {
  Json taken = Json::array(), exits = Json::array();
  for (const auto& t : taken_log_)
    taken.push_back(Json{{"id", t.id},
                         {"delta", rat_to_json(Rat(t.delta))},
                         {"candidates", t.cands}});
  for (const auto& x : exit_log_)
    exits.push_back(Json{{"id", x.id},
                         {"chi", rat_to_json(Rat(x.chi))},
                         {"replaced_by", x.replaced_by}});
  return Json{{"taken", taken}, {"exits", exits}};
}

Val incremental_value(const InstrumentedOracle& oracle, const IdVec& s_ordered,
                      ElemId e) {
  IdVec prefix;
  for (ElemId x : s_ordered) {
    if (x == e) break;
    prefix.push_back(x);
  }
  Val base = oracle.eval(prefix);
  prefix.push_back(e);
  return oracle.eval(prefix) - base;
}

}  // namespace streamsub
