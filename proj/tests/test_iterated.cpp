#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <memory>
#include <vector>

#include "streamsub/errors.hpp"
#include "streamsub/functions.hpp"
#include "streamsub/generator.hpp"
#include "streamsub/iterated.hpp"
#include "streamsub/offline.hpp"

using namespace streamsub;

namespace {

OfflineFn exact_over(const InstrumentedOracle& oracle, const Matchoid& m) {
  return [&oracle, &m](const IdVec& g) { return exact_bruteforce(oracle, m, g); };
}

}  // namespace

TEST_CASE("rejects of the first phase feed the second, takes are withheld") {
  Modular fn({{0, 5}, {1, 3}, {2, 1}});
  InstrumentedOracle oracle(fn);
  std::vector<std::unique_ptr<MatroidOracle>> ms;
  ms.push_back(std::make_unique<UniformMatroid>(IdVec{0, 1, 2}, 1));
  Matchoid m(std::move(ms), 1);

  // First phase at alpha 4 takes only element 0; 1 and 2 trickle down.
  IteratedGreedy it(m, oracle, {.alpha = 4, .beta = 1},
                    exact_over(oracle, m));
  it.process(0);
  it.process(1);
  it.process(2);
  CHECK(it.first().state().members() == IdVec{0});
  CHECK(it.second().state().members() == IdVec{1});  // 2 priced out by beta
  CHECK(it.first().trace().size() == 3);
  CHECK(it.second().trace().size() == 2);  // never saw element 0

  Outcome out = it.finish();
  CHECK(out.ids == IdVec{0});
  CHECK(out.value == 5);
  CHECK(it.winner() == 1);
  CHECK(it.taken_count() == 1);
}

TEST_CASE("phase partition and winner order on generated instances") {
  for (const std::string& kind : generator_kinds()) {
    for (std::uint64_t seed = 100; seed < 106; ++seed) {
      InstanceBundle b = generate_bundle(kind, 8, 2, seed);
      InstrumentedOracle oracle(*b.fn);
      OfflineResult opt = exact_bruteforce(oracle, b.matchoid, b.universe);
      Rat alpha = Rat(opt.value, 4 * b.matchoid.k());

      IteratedGreedy it(b.matchoid, oracle, {.alpha = alpha, .beta = 1},
                        exact_over(oracle, b.matchoid));
      for (ElemId e : b.universe) it.process(e);

      // Every element lands in exactly one phase-one fate; phase two sees
      // exactly the outright rejects.
      IdVec second_seen;
      for (const TraceEvent& ev : it.second().trace())
        second_seen.push_back(ev.id);
      IdVec expected;
      for (const TraceEvent& ev : it.first().trace())
        if (!ev.accepted) expected.push_back(ev.id);
      CHECK(second_seen == expected);
      CHECK(it.first().trace().size() == b.universe.size());

      IdVec taken1 = it.first().state().taken_ids();
      Val v1 = it.first().state().value();
      Val v2 = it.second().state().value();
      OfflineResult v3 = exact_bruteforce(oracle, b.matchoid, taken1);
      Outcome out = it.finish();
      CHECK(out.value == std::max({v1, v2, v3.value}));
      if (it.winner() == 1) CHECK(out.value == v1);
      if (it.winner() == 2) {
        CHECK(out.value == v2);
        CHECK(v2 > v1);
      }
      if (it.winner() == 3) {
        CHECK(out.value == v3.value);
        CHECK(v3.value > v1);
        CHECK(v3.value > v2);
      }
      CHECK(out.value <= opt.value);
    }
  }
}

TEST_CASE("pipelined run equals a manual two-pass replay") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (const std::string& kind : {std::string("coverage-uniform"),
                                    std::string("cut-cardinality"),
                                    std::string("modular-matching")}) {
      InstanceBundle b = generate_bundle(kind, 9, 2, seed);
      InstrumentedOracle oracle(*b.fn);
      GreedyParams params{.alpha = Rat(1, 2), .beta = 1};

      IteratedGreedy it(b.matchoid, oracle, params,
                        exact_over(oracle, b.matchoid));
      for (ElemId e : b.universe) it.process(e);

      // Manual replay: run phase one alone, then stream its outright rejects
      // through a fresh alpha-zero greedy.
      StreamingGreedy one(b.matchoid, oracle, params);
      for (ElemId e : b.universe) one.process(e);
      StreamingGreedy two(b.matchoid, oracle, {.alpha = 0, .beta = params.beta});
      for (const TraceEvent& ev : one.trace())
        if (!ev.accepted) two.process(ev.id);

      CHECK(it.first().trace() == one.trace());
      CHECK(it.second().trace() == two.trace());
      CHECK(it.first().state().members() == one.state().members());
      CHECK(it.second().state().members() == two.state().members());
    }
  }
}

TEST_CASE("iterated finish is single-shot") {
  Modular fn(std::map<ElemId, Val>{{0, 1}});
  InstrumentedOracle oracle(fn);
  std::vector<std::unique_ptr<MatroidOracle>> ms;
  ms.push_back(std::make_unique<UniformMatroid>(IdVec{0}, 1));
  Matchoid m(std::move(ms), 1);
  IteratedGreedy it(m, oracle, {}, exact_over(oracle, m));
  it.process(0);
  CHECK(it.identity_checks() > 0);
  it.finish();
  CHECK_THROWS_AS(it.finish(), ProtocolError);
  CHECK_THROWS_AS(it.process(0), ProtocolError);
}
