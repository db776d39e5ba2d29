#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "streamsub/errors.hpp"
#include "streamsub/matchoid.hpp"
#include "streamsub/matroid.hpp"

using namespace streamsub;

TEST_CASE("uniform matroid") {
  UniformMatroid m({0, 1, 2, 3}, 2);
  CHECK(m.ground() == IdVec{0, 1, 2, 3});
  CHECK(m.rank() == 2);
  CHECK(m.independent({}));
  CHECK(m.independent({3}));
  CHECK(m.independent({0, 2}));
  CHECK_FALSE(m.independent({0, 1, 2}));
  CHECK_THROWS_AS(m.independent({9}), UnknownElementError);
  CHECK(verify_matroid_axioms(m));
}

TEST_CASE("partition matroid") {
  PartitionMatroid m({{{0, 1}, 1}, {{2, 3}, 2}});
  CHECK(m.ground() == IdVec{0, 1, 2, 3});
  CHECK(m.independent({0, 2, 3}));
  CHECK_FALSE(m.independent({0, 1}));       // block one over capacity
  CHECK(m.independent({1, 2}));
  CHECK_THROWS_AS(m.independent({4}), UnknownElementError);
  CHECK_THROWS_AS(PartitionMatroid({{{0, 1}, 1}, {{1, 2}, 1}}),
                  PreconditionError);  // blocks must be disjoint
  CHECK(verify_matroid_axioms(m));
}

TEST_CASE("graphic matroid handles cycles, parallels, loops") {
  // triangle on vertices 0,1,2 plus a parallel edge and a self-loop
  GraphicMatroid m({0, 1, 2}, {{0, {0, 1}},
                               {1, {1, 2}},
                               {2, {0, 2}},
                               {3, {0, 1}},    // parallel to edge 0
                               {4, {2, 2}}});  // self-loop
  CHECK(m.ground() == IdVec{0, 1, 2, 3, 4});
  CHECK(m.independent({0, 1}));
  CHECK_FALSE(m.independent({0, 1, 2}));  // triangle
  CHECK_FALSE(m.independent({0, 3}));     // two parallel edges
  CHECK(m.independent({1, 3}));
  CHECK_FALSE(m.independent({4}));        // self-loop is a cycle by itself
  CHECK_THROWS_AS(GraphicMatroid({0, 1}, {{0, {0, 5}}}), UnknownElementError);
  CHECK(verify_matroid_axioms(m));
}

namespace {

// Down-closure of {{0}, {1, 2}}: independents are {}, {0}, {1}, {2}, {1,2}.
// Exchange fails for A = {0}, B = {1,2}: neither {0,1} nor {0,2} is listed.
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

TEST_CASE("axiom check rejects a non-matroid family") {
  ExplicitFamily bad;
  CHECK_FALSE(verify_matroid_axioms(bad));

  UniformMatroid wide({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 3);
  CHECK_THROWS_AS(verify_matroid_axioms(wide), LimitError);
  CHECK(verify_matroid_axioms(wide, 11));
}

TEST_CASE("constraint json round-trips all matroid types") {
  std::vector<std::unique_ptr<MatroidOracle>> ms;
  ms.push_back(std::make_unique<UniformMatroid>(IdVec{0, 1, 2, 3}, 2));
  ms.push_back(std::make_unique<PartitionMatroid>(
      std::vector<PartitionMatroid::Block>{{{0, 1}, 1}, {{2, 3}, 2}}));
  ms.push_back(std::make_unique<GraphicMatroid>(
      IdVec{0, 1, 2},
      std::map<ElemId, std::pair<int, int>>{{0, {0, 1}}, {1, {1, 2}}, {2, {0, 2}}}));
  Matchoid m(std::move(ms), 2);

  Json j = matchoid_to_json(m);
  Matchoid back = matchoid_from_json(j);
  CHECK(back.k() == m.k());
  CHECK(back.p() == m.p());
  CHECK(back.ground() == m.ground());
  CHECK(matchoid_to_json(back) == j);

  Json bad = {{"k", 1}, {"matroids", Json::array({Json{{"type", "mystery"}}})}};
  CHECK_THROWS_AS(matchoid_from_json(bad), PreconditionError);
  CHECK_THROWS_AS(matchoid_from_json(Json{{"k", 1}}), PreconditionError);
}
