#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "streamsub/errors.hpp"
#include "streamsub/functions.hpp"
#include "streamsub/solution_state.hpp"

using namespace streamsub;

namespace {

// Unit items a=0, b=1, c=2, d=3; element e covers covers[e].
WeightedCoverage chain_fixture() {
  return WeightedCoverage({{0, 1}, {1, 1}, {2, 1}, {3, 1}},
                          {{0, {0}}, {1, {0, 1}}, {2, {1, 2}}, {3, {3}}});
}

}  // namespace

TEST_CASE("telescoping identity holds through accepts") {
  WeightedCoverage f = chain_fixture();
  InstrumentedOracle o(f);
  SolutionState st(o);
  CHECK(st.value() == 0);
  CHECK(st.f_empty() == 0);

  CHECK(st.apply_exchange(0, {}) == 1);  // covers a
  CHECK(st.apply_exchange(1, {}) == 1);  // adds b
  CHECK(st.apply_exchange(2, {}) == 1);  // adds c
  CHECK(st.members() == IdVec{0, 1, 2});
  CHECK(st.value() == 3);
  CHECK(st.nu(0) == 1);
  CHECK(st.nu(1) == 1);
  CHECK(st.nu(2) == 1);
  CHECK(st.nu_sum({0, 2}) == 2);
  CHECK(st.identity_checks() == 3);
  CHECK_THROWS_AS(st.nu(3), PreconditionError);
}

TEST_CASE("deleting a member grows survivor values") {
  WeightedCoverage f = chain_fixture();
  InstrumentedOracle o(f);
  SolutionState st(o);
  st.apply_exchange(0, {});
  st.apply_exchange(1, {});
  st.apply_exchange(2, {});

  // Element 3 (covers d) displaces 1; survivor 2 now claims item b too.
  Val gain = st.apply_exchange(3, {1});
  CHECK(gain == 1);  // f({0,2,3}) - f({0,1,2}) = 4 - 3
  CHECK(st.members() == IdVec{0, 2, 3});
  CHECK(st.value() == 4);
  CHECK(st.nu(2) == 2);  // was 1 while 1 held item b
  CHECK(st.nu(3) == 1);

  REQUIRE(st.exit_log().size() == 1);
  CHECK(st.exit_log()[0].id == 1);
  CHECK(st.exit_log()[0].chi == 1);
  CHECK(st.exit_log()[0].replaced_by == 3);
  CHECK(st.exit_value_sum() == 1);

  REQUIRE(st.taken_log().size() == 4);
  CHECK(st.taken_log()[3].id == 3);
  CHECK(st.taken_log()[3].delta == 1);
  CHECK(st.taken_log()[3].cands == IdVec{1});
  CHECK(st.taken_ids() == IdVec{0, 1, 2, 3});
}

TEST_CASE("value hints are accepted only for plain appends") {
  Modular f({{0, 5}, {1, 3}});
  InstrumentedOracle o(f);
  SolutionState st(o);
  CHECK(st.apply_exchange(0, {}, 5) == 5);
  CHECK(o.calls() == 1);  // only the f(empty) probe; the hint covered f({0})
  CHECK_THROWS_AS(st.apply_exchange(1, {0}, 8), PreconditionError);
  CHECK_THROWS_AS(st.apply_exchange(0, {}), PreconditionError);  // member again
  CHECK_THROWS_AS(st.apply_exchange(1, {1}), PreconditionError);  // not a member
}

TEST_CASE("a non-submodular oracle is caught at delete time") {
  struct Sneaky : SubmodularFunction {
    IdVec dom{0, 1, 2};
    // f({}) = 0, f({0}) = 1, f({0,1}) = 2, f({0,1,2}) = 3 but f({0,2}) = 1:
    // after deleting 1, survivor 2's nu falls from 1 to 0.
    Val evaluate(const IdVec& s) const override {
      IdVec k = sorted_copy(s);
      if (k == IdVec{0, 2}) return 1;
      return static_cast<Val>(k.size());
    }
    bool is_monotone() const override { return true; }
    const IdVec& domain() const override { return dom; }
  } f;
  InstrumentedOracle o(f);
  SolutionState st(o);
  st.apply_exchange(0, {});
  st.apply_exchange(1, {});
  st.apply_exchange(2, {});
  CHECK_THROWS_AS(st.apply_exchange(3, {1}), OracleError);
}

TEST_CASE("incremental_value uses the delivery prefix") {
  WeightedCoverage f = chain_fixture();
  InstrumentedOracle o(f);
  IdVec order{1, 0, 2};
  CHECK(incremental_value(o, order, 1) == 2);  // empty prefix: covers a,b
  CHECK(incremental_value(o, order, 0) == 0);  // a already covered
  CHECK(incremental_value(o, order, 2) == 1);
  CHECK(incremental_value(o, order, 3) == 1);  // pending: full set is prefix
}
