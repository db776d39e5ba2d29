#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "streamsub/instance.hpp"
#include "streamsub/json_util.hpp"
#include "streamsub/offline.hpp"
#include "streamsub/rational.hpp"

namespace streamsub {

// Independent re-verification of the run-log inequalities.  Everything here
// recomputes from a separate oracle wrapper and the recorded logs; nothing
// trusts the algorithm's own caches beyond what it wrote down.

struct LemmaCounts {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};
using LemmaLedger = std::map<std::string, LemmaCounts>;

// One parameterized algorithm run on one instance.
struct RunDesc {
  std::string algorithm;  // greedy | iterated | randomized | cardinality
  Rat alpha = 0;
  Rat beta = 1;
  std::size_t capacity = 1;     // randomized variants only
  std::uint64_t algo_seed = 0;  // randomized variants only
  StreamOrder order = StreamOrder::given;
  std::uint64_t order_seed = 0;
  TieBreak tie = TieBreak::prefer_earliest;
};
Json run_desc_to_json(const RunDesc& d);

struct Violation {
  std::string lemma;
  std::string klass;
  RunDesc run;
  std::string details;
};

struct SuiteConfig {
  int instances_per_class = 25;
  std::uint64_t seed = 1;
  std::string reproducer_dir;  // empty: do not write reproducer files
  bool shrink = true;
  std::vector<std::string> classes;  // empty: all of suite_classes()
  std::size_t max_reproducers = 5;
};

struct SuiteResult {
  LemmaLedger ledger;
  std::vector<Violation> violations;  // capped at max_reproducers
  std::vector<std::string> reproducer_paths;
  std::uint64_t total_checked() const;
  std::uint64_t total_violations() const;
};

// Generator classes the suite sweeps (the five file-format kinds plus the
// two-matroid cut class).
const std::vector<std::string>& suite_classes();

SuiteResult check_lemma_suite(const SuiteConfig& cfg);

// Runs one described run on one instance and records every lemma check into
// `ledger` (and, when non-null, full violation records into `viol`).  `opt`
// must be the exact optimum of the instance.  Exposed so tests can drive
// single runs and so shrinking can re-run one lemma in isolation.
void run_and_check(const InstanceBundle& b, const InstrumentedOracle& verify,
                   const OfflineResult& opt, const RunDesc& d,
                   const std::string& klass, LemmaLedger& ledger,
                   std::vector<Violation>* viol);

// Drops every element outside `keep` from both files of an instance:
// coverage sets / modular weights / cut vertices and their arcs, matroid
// grounds, partition blocks (empty blocks vanish), graphic edges.  Declared
// k and universe weights are left alone.
std::pair<Json, Json> filter_instance_json(const Json& fn_json,
                                           const Json& cons_json,
                                           const IdVec& keep);

// Greedy one-element-at-a-time minimization: repeatedly drop any element
// whose removal keeps `still_fails` true, until no single removal does.
// Predicates that throw on a candidate count as "does not fail".
using FailurePredicate = std::function<bool(const Json& fn_json,
                                            const Json& cons_json)>;
std::pair<Json, Json> shrink_instance(Json fn_json, Json cons_json,
                                      const FailurePredicate& still_fails);

// True iff re-running `d` on the given instance files re-triggers `lemma`.
// Unbuildable instances return false.
bool lemma_violated_on(const Json& fn_json, const Json& cons_json,
                       const RunDesc& d, const std::string& lemma);

}  // namespace streamsub
