#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "streamsub/json_util.hpp"
#include "streamsub/oracle.hpp"
#include "streamsub/types.hpp"

namespace streamsub {

// One accepted element: the solution-value gain it brought and the members
// it displaced.  The full taken set U is exactly the ids of this log.
struct TakenEntry {
  ElemId id;
  Val delta;
  IdVec cands;
};

// One displaced member: its incremental value at the moment of deletion and
// the element that pushed it out.
struct ExitEntry {
  ElemId id;
  Val chi;
  ElemId replaced_by;
};

// Solution bookkeeping shared by every streaming algorithm here.  Members
// are kept in delivery order; alongside them sit cached prefix values
// f(members[0..i]) and the incremental values nu[i] = f(prefix+member) -
// f(prefix).  The nu values telescope, so sum(nu) == f(S) - f(empty) exactly;
// that identity is re-checked after every mutation and a failure throws
// InternalError.  Deleting members can only shrink a survivor's prefix, so
// by submodularity each survivor's nu may only grow; a shrink throws
// OracleError (the oracle is not submodular).
class SolutionState {
 public:
  explicit SolutionState(const InstrumentedOracle& oracle);

  const IdVec& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_member(ElemId e) const { return contains(members_, e); }
  Val value() const { return prefix_.empty() ? f_empty_ : prefix_.back(); }
  Val f_empty() const { return f_empty_; }

  // Incremental value of a current member (PreconditionError otherwise).
  Val nu(ElemId e) const;
  Val nu_sum(const IdVec& ids) const;

  // Removes `cands` (current members, possibly none), appends e, updates all
  // caches, logs the exchange, and returns the value gain.  `value_hint` may
  // carry f(S+e) when cands is empty and the caller just evaluated it; it is
  // rejected otherwise.  Never tests independence: callers decide that.
  Val apply_exchange(ElemId e, const IdVec& cands,
                     std::optional<Val> value_hint = std::nullopt);

  const std::vector<TakenEntry>& taken_log() const { return taken_log_; }
  const std::vector<ExitEntry>& exit_log() const { return exit_log_; }
  IdVec taken_ids() const;
  Val exit_value_sum() const;
  std::uint64_t identity_checks() const { return identity_checks_; }

  Json logs_to_json() const;

 private:
  void check_identity();

  const InstrumentedOracle* oracle_;
  IdVec members_;
  std::vector<Val> prefix_;
  std::vector<Val> nu_;
  Val f_empty_;
  std::vector<TakenEntry> taken_log_;
  std::vector<ExitEntry> exit_log_;
  std::uint64_t identity_checks_ = 0;
};

// nu(f, S, e): marginal of e on top of the members strictly before it in
// delivery order.  e may be a member or the pending newest element (then the
// whole of s_ordered is its prefix).  Two oracle evaluations.
Val incremental_value(const InstrumentedOracle& oracle, const IdVec& s_ordered,
                      ElemId e);

}  // namespace streamsub
