#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "streamsub/errors.hpp"
#include "streamsub/functions.hpp"
#include "streamsub/oracle.hpp"

using namespace streamsub;

namespace {

// items 0..2 weighted 2,1,3; element e covers covers[e].
WeightedCoverage cov_fixture() {
  return WeightedCoverage({{0, 2}, {1, 1}, {2, 3}},
                          {{0, {0}}, {1, {0, 1}}, {2, {2}}, {3, {1, 2}}});
}

// triangle 0->1 (3), 1->2 (2), 2->0 (5)
DirectedCut cut_fixture() {
  return DirectedCut({0, 1, 2}, {{0, 1, 3}, {1, 2, 2}, {2, 0, 5}});
}

}  // namespace

TEST_CASE("coverage values by hand") {
  WeightedCoverage f = cov_fixture();
  CHECK(f.evaluate({}) == 0);
  CHECK(f.evaluate({0}) == 2);
  CHECK(f.evaluate({1}) == 3);
  CHECK(f.evaluate({2}) == 3);
  CHECK(f.evaluate({3}) == 4);
  CHECK(f.evaluate({0, 1}) == 3);
  CHECK(f.evaluate({1, 3}) == 6);
  CHECK(f.evaluate({0, 1, 2, 3}) == 6);
  CHECK(f.is_monotone());
  CHECK(f.domain() == IdVec{0, 1, 2, 3});
  CHECK(verify_submodular(f, f.domain()));
}

TEST_CASE("directed cut values by hand") {
  DirectedCut f = cut_fixture();
  CHECK(f.evaluate({}) == 0);
  CHECK(f.evaluate({0}) == 3);
  CHECK(f.evaluate({1}) == 2);
  CHECK(f.evaluate({2}) == 5);
  CHECK(f.evaluate({0, 1}) == 2);
  CHECK(f.evaluate({0, 2}) == 3);
  CHECK(f.evaluate({1, 2}) == 5);
  CHECK(f.evaluate({0, 1, 2}) == 0);
  CHECK_FALSE(f.is_monotone());
  CHECK(verify_submodular(f, f.domain()));
}

TEST_CASE("modular values and validation") {
  Modular f({{0, 5}, {1, 3}, {2, 1}});
  CHECK(f.evaluate({}) == 0);
  CHECK(f.evaluate({0, 2}) == 6);
  CHECK(f.evaluate({0, 1, 2}) == 9);
  CHECK(verify_submodular(f, f.domain()));
  CHECK_THROWS_AS(Modular(std::map<ElemId, Val>{{0, -1}}), PreconditionError);
  CHECK_THROWS_AS(WeightedCoverage({{0, -2}}, {{0, {0}}}), PreconditionError);
  CHECK_THROWS_AS(WeightedCoverage({{0, 1}}, {{0, {7}}}), UnknownElementError);
  CHECK_THROWS_AS(DirectedCut({0, 1}, {{0, 5, 1}}), UnknownElementError);
  CHECK_THROWS_AS(DirectedCut({0, 1}, {{0, 1, -2}}), PreconditionError);
}

TEST_CASE("a non-submodular function is caught") {
  // f(S) = |S|^2 on two elements: f({0,1}) + f({}) > f({0}) + f({1}).
  struct Sq : SubmodularFunction {
    IdVec dom{0, 1};
    Val evaluate(const IdVec& s) const override {
      return static_cast<Val>(s.size() * s.size());
    }
    bool is_monotone() const override { return true; }
    const IdVec& domain() const override { return dom; }
  } f;
  CHECK_FALSE(verify_submodular(f, f.dom));
  IdVec big(14);
  for (int i = 0; i < 14; ++i) big[static_cast<std::size_t>(i)] = i;
  CHECK_THROWS_AS(verify_submodular(f, big), LimitError);
}

TEST_CASE("instrumented oracle counts and memoizes") {
  WeightedCoverage f = cov_fixture();
  InstrumentedOracle plain(f);
  CHECK(plain.eval({0, 1}) == 3);
  CHECK(plain.eval({0, 1}) == 3);
  CHECK(plain.calls() == 2);
  CHECK(plain.cache_hits() == 0);

  InstrumentedOracle memo(f, true);
  CHECK(memo.eval({1, 0}) == 3);  // key canonicalization is the memo's job
  CHECK(memo.eval({0, 1}) == 3);
  CHECK(memo.calls() == 1);
  CHECK(memo.cache_hits() == 1);
}

TEST_CASE("marginal is two evaluations and rejects members") {
  WeightedCoverage f = cov_fixture();
  InstrumentedOracle o(f);
  CHECK(marginal(o, {0}, 1) == 1);  // adds item 1 only
  CHECK(marginal(o, {1}, 3) == 3);  // adds item 2
  CHECK(o.calls() == 4);
  CHECK_THROWS_AS(marginal(o, {0, 1}, 1), PreconditionError);
}

TEST_CASE("contraction shifts the baseline") {
  WeightedCoverage f = cov_fixture();
  ContractedFunction fz(f, {1});  // items 0,1 pre-covered
  CHECK(fz.domain() == IdVec{0, 2, 3});
  CHECK(fz.evaluate({}) == 0);
  CHECK(fz.evaluate({0}) == 0);  // item 0 already covered
  CHECK(fz.evaluate({2}) == 3);
  CHECK(fz.evaluate({3}) == 3);  // only item 2 is new
  CHECK(verify_submodular(fz, fz.domain()));

  DirectedCut c = cut_fixture();
  ContractedFunction cz(c, {0});  // f_Z can go negative for cuts
  CHECK(cz.evaluate({1}) == c.evaluate({0, 1}) - c.evaluate({0}));
  CHECK(cz.evaluate({1}) == -1);
}

TEST_CASE("contraction marginals match the union form") {
  DirectedCut c = cut_fixture();
  ContractedFunction cz(c, {0});
  InstrumentedOracle oc(c), ocz(cz);
  // f_Z(A + e) - f_Z(A) == f(Z u A + e) - f(Z u A)
  CHECK(marginal(ocz, {}, 1) == oc.eval({0, 1}) - oc.eval({0}));
  CHECK(marginal(ocz, {1}, 2) == oc.eval({0, 1, 2}) - oc.eval({0, 1}));
}
