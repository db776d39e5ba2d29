#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "streamsub/errors.hpp"
#include "streamsub/matchoid.hpp"

using namespace streamsub;

namespace {

std::vector<std::unique_ptr<MatroidOracle>> one(std::unique_ptr<MatroidOracle> m) {
  std::vector<std::unique_ptr<MatroidOracle>> v;
  v.push_back(std::move(m));
  return v;
}

// Bipartite matching as a 2-matchoid: edges 0 = (u1,v1), 1 = (u2,v2),
// 2 = (u1,v2).  Left matroid caps each u-side vertex at one incident edge,
// right matroid the v-side.
Matchoid matching_fixture() {
  std::vector<std::unique_ptr<MatroidOracle>> ms;
  ms.push_back(std::make_unique<PartitionMatroid>(
      std::vector<PartitionMatroid::Block>{{{0, 2}, 1}, {{1}, 1}}));
  ms.push_back(std::make_unique<PartitionMatroid>(
      std::vector<PartitionMatroid::Block>{{{0}, 1}, {{1, 2}, 1}}));
  return Matchoid(std::move(ms), 2);
}

std::function<Val(ElemId)> nu_table(std::map<ElemId, Val> t) {
  return [t = std::move(t)](ElemId e) { return t.at(e); };
}

// Down-closure of {{0}, {1,2}} is not a matroid: exchange fails between
// {0} and {1,2}.
struct ExplicitFamily : MatroidOracle {
  IdVec g{0, 1, 2};
  const IdVec& ground() const override { return g; }
  bool independent(const IdVec& s) const override {
    IdVec k = sorted_copy(s);
    return k.empty() || k == IdVec{0} || k == IdVec{1} || k == IdVec{2} ||
           k == IdVec{1, 2};
  }
};

}  // namespace

TEST_CASE("membership bookkeeping") {
  Matchoid m = matching_fixture();
  CHECK(m.k() == 2);
  CHECK(m.p() == 2);  // every edge touches one left and one right block
  CHECK(m.num_matroids() == 2);
  CHECK(m.ground() == IdVec{0, 1, 2});
  CHECK(m.in_some_ground(2));
  CHECK_FALSE(m.in_some_ground(9));
  CHECK(m.membership_count(0) == 2);
  CHECK_THROWS_AS(m.membership_count(9), UnknownElementError);
  CHECK_THROWS_AS(Matchoid({}, -1), PreconditionError);
}

TEST_CASE("independence is the conjunction over sub-grounds") {
  Matchoid m = matching_fixture();
  CHECK(m.independent({}));
  CHECK(m.independent({0, 1}));  // a perfect matching
  CHECK_FALSE(m.independent({0, 2}));  // share u1
  CHECK_FALSE(m.independent({1, 2}));  // share v2
  CHECK_THROWS_AS(m.independent({0, 9}), UnknownElementError);
}

TEST_CASE("exchange collects one candidate per violated matroid") {
  Matchoid m = matching_fixture();
  auto nu = nu_table({{0, 1}, {1, 1}});
  // Edge 2 conflicts with 0 on the left and with 1 on the right.
  CHECK(m.exchange_candidates({0, 1}, nu, 2) == IdVec{0, 1});
  // Nothing violated: empty candidate set.
  CHECK(m.exchange_candidates({0}, nu, 1) == IdVec{});
  CHECK_THROWS_AS(m.exchange_candidates({0}, nu, 9), UnknownElementError);
  CHECK_THROWS_AS(m.exchange_candidates({9}, nu, 0), UnknownElementError);
}

TEST_CASE("candidate ties break by delivery position") {
  Matchoid m(one(std::make_unique<UniformMatroid>(IdVec{0, 1, 2}, 2)), 2);
  auto nu = nu_table({{0, 3}, {1, 3}, {2, 0}});
  CHECK(m.exchange_candidates({0, 1}, nu, 2) == IdVec{0});
  CHECK(m.exchange_candidates({0, 1}, nu, 2, TieBreak::prefer_latest) ==
        IdVec{1});
  // Unequal values override position either way.
  auto nu2 = nu_table({{0, 3}, {1, 2}, {2, 0}});
  CHECK(m.exchange_candidates({0, 1}, nu2, 2) == IdVec{1});
  CHECK(m.exchange_candidates({0, 1}, nu2, 2, TieBreak::prefer_latest) ==
        IdVec{1});
}

TEST_CASE("loops and broken oracles are reported") {
  Matchoid g(one(std::make_unique<GraphicMatroid>(
                 IdVec{0, 1, 2},
                 std::map<ElemId, std::pair<int, int>>{
                     {0, {0, 1}}, {1, {1, 2}}, {2, {2, 2}}})),
             2);
  auto nu = nu_table({{0, 1}, {1, 1}, {2, 1}});
  // A self-loop can never be made independent by one removal.
  CHECK_THROWS_AS(g.exchange_candidates({0}, nu, 2), OracleError);

  Matchoid bad(one(std::make_unique<ExplicitFamily>()), 2);
  CHECK_THROWS_AS(bad.exchange_candidates({1, 2}, nu, 0), OracleError);
}
