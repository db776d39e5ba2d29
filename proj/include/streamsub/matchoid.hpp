#pragma once

#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "streamsub/json_util.hpp"
#include "streamsub/matroid.hpp"
#include "streamsub/types.hpp"

namespace streamsub {

// Which element wins an exchange-candidate tie on equal incremental value.
// prefer_earliest (smaller delivery index) is the shipped behavior;
// prefer_latest exists so tests can show the choice changes outputs without
// breaking any run invariant.
enum class TieBreak { prefer_earliest, prefer_latest };

// A family of matroids over overlapping sub-grounds.  A set is independent
// iff its restriction to every sub-ground is independent there.  p is the
// maximum number of matroids any one element belongs to; k is the declared
// bound on independent-set size (taken from the constraint file, asserted
// against live solutions at run time, never inferred).
class Matchoid {
 public:
  Matchoid(std::vector<std::unique_ptr<MatroidOracle>> matroids, int k);

  Matchoid(Matchoid&&) = default;
  Matchoid& operator=(Matchoid&&) = default;

  bool independent(const IdVec& s) const;

  // One stage of the streaming exchange rule.  For each matroid whose
  // sub-ground contains e and whose restriction S+e violates independence,
  // pick the member of minimum incremental value whose removal restores
  // independence; the union of those picks (duplicates collapsed) comes back
  // sorted by id.  `s_ordered` is the current solution in delivery order and
  // `nu` its incremental values.  A matroid where no single removal helps
  // means the oracle is not a matroid (or e is a loop): OracleError.
  IdVec exchange_candidates(const IdVec& s_ordered,
                            const std::function<Val(ElemId)>& nu, ElemId e,
                            TieBreak tie = TieBreak::prefer_earliest) const;

  int k() const { return k_; }
  int p() const { return p_; }
  std::size_t num_matroids() const { return matroids_.size(); }
  const MatroidOracle& matroid(std::size_t i) const { return *matroids_[i]; }
  const IdVec& ground() const { return ground_; }
  bool in_some_ground(ElemId e) const { return membership_.count(e) != 0; }
  int membership_count(ElemId e) const;

 private:
  const std::vector<int>& memberships_of(ElemId e) const;

  std::vector<std::unique_ptr<MatroidOracle>> matroids_;
  std::vector<std::unordered_set<ElemId>> ground_sets_;
  std::unordered_map<ElemId, std::vector<int>> membership_;
  IdVec ground_;
  int k_;
  int p_;
};

// Constraint file: {"k": ..., "matroids": [{"type": "uniform"|"partition"|
// "graphic", ...}]}.  p is always computed from the grounds, never declared.
Matchoid matchoid_from_json(const Json& j);
Json matchoid_to_json(const Matchoid& m);
Matchoid load_matchoid(const std::string& path);

}  // namespace streamsub
