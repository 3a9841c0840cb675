#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "qorder/enumerate.hpp"
#include "qorder/morita.hpp"

using namespace qorder;

namespace {

EnrichedStructure s_m() { return star_idempotent(fixture_q3(), ArrowRef{0, 0, 1}); }
EnrichedStructure c1() { return star_identity(fixture_q3(), 0); }

EnrichedStructure isolated_q2() {
  return make_structure(fixture_q2(), TypedSet{{"a", "b"}, {0, 0}}, {1, 0, 0, 0});
}

}  // namespace

TEST_CASE("inverse pairs") {
  EnrichedStructure c = c1();
  SemiDistributor ident = identity_semidistributor(c);
  CHECK(is_inverse_pair(ident, ident));

  EnrichedStructure sm = s_m();
  SemiDistributor fwd = make_semidistributor(sm, c, {1});
  SemiDistributor bwd = make_semidistributor(c, sm, {1});
  CHECK_FALSE(is_inverse_pair(fwd, bwd));

  CompletionResult cc = cauchy_complete_trs(sm);
  auto [into, from] = induced_pair(cc.embed);
  CHECK(is_inverse_pair(into, from));
}

TEST_CASE("isomorphism search finds the identity on equal inputs") {
  EnrichedStructure c = c1();
  IsoSearchResult res = search_isomorphism(c, c);
  REQUIRE(res.status == SearchStatus::found);
  CHECK(is_inverse_pair(res.witness->forward, res.witness->backward));
}

TEST_CASE("the isolated example is isomorphic to its stripped category") {
  EnrichedStructure a = isolated_q2();
  StripResult strip = strip_isolated(a);
  REQUIRE(strip.kept == std::vector<int>{0});
  CHECK(strip.stripped.flags.category);
  CHECK(strip.witness_verified);

  IsoSearchResult res = search_isomorphism(strip.stripped, a);
  CHECK(res.status == SearchStatus::found);
}

TEST_CASE("the middle idempotent structure is not isomorphic to the unit one") {
  IsoSearchResult res = search_isomorphism(s_m(), c1());
  CHECK(res.status == SearchStatus::none);
  CHECK(oracle::iso_pair_scan(s_m(), c1()) == false);
}

TEST_CASE("candidate-backward search agrees with the full pair scan") {
  for (const char* name : {"q2", "q3"}) {
    QuantaloidPtr q = fixture_by_name(name);
    auto corpus = enumerate_structures(q, 1, StructClass::totally_regular);
    for (const EnrichedStructure& a : corpus)
      for (const EnrichedStructure& b : corpus) {
        IsoSearchResult res = search_isomorphism(a, b);
        REQUIRE(res.status != SearchStatus::budget_exceeded);
        CHECK((res.status == SearchStatus::found) == oracle::iso_pair_scan(a, b));
      }
  }
}

TEST_CASE("equivalence search") {
  EnrichedStructure sm = s_m(), c = c1();
  CompletionResult sm_cc = cauchy_complete_trs(sm);
  CompletionResult c_cc = cauchy_complete_trs(c);

  EquivSearchResult self = search_equivalence(sm_cc.completed, sm_cc.completed);
  CHECK(self.status == SearchStatus::found);

  EquivSearchResult diff = search_equivalence(sm_cc.completed, c_cc.completed);
  CHECK(diff.status == SearchStatus::none);

  EnrichedStructure a = isolated_q2();
  StripResult strip = strip_isolated(a);
  CompletionResult a_cc = cauchy_complete_trs(a);
  CompletionResult s_cc = cauchy_complete_trs(strip.stripped);
  EquivSearchResult glue = search_equivalence(a_cc.completed, s_cc.completed);
  CHECK(glue.status == SearchStatus::found);
}

TEST_CASE("the two search routes give one verdict") {
  MoritaReport none_report = prop19_check(s_m(), c1());
  CHECK(none_report.consistent);
  CHECK(none_report.iso.status == SearchStatus::none);
  CHECK(none_report.equivalence.status == SearchStatus::none);

  EnrichedStructure a = isolated_q2();
  MoritaReport found_report = prop19_check(a, strip_isolated(a).stripped);
  CHECK(found_report.consistent);
  CHECK(found_report.iso.status == SearchStatus::found);

  MoritaReport self_report = prop19_check(a, a);
  CHECK(self_report.consistent);
  CHECK(self_report.iso.status == SearchStatus::found);
}

TEST_CASE("stripping refuses bases where the argument does not apply") {
  CHECK_THROWS_AS(strip_isolated(s_m()), input_error);
}

TEST_CASE("stripping over the truncated tropical base") {
  QuantaloidPtr trop = fixture_trop(4);
  EnrichedStructure far = make_structure(trop, singleton_typed(0), {4});
  StripResult gone = strip_isolated(far);
  CHECK(gone.stripped.obs.size() == 0);
  CHECK(gone.witness_verified);

  EnrichedStructure metric = make_structure(
      trop, TypedSet{{"a", "b"}, {0, 0}}, {0, 2, 3, 0});
  REQUIRE(metric.flags.totally_regular);
  StripResult keep = strip_isolated(metric);
  CHECK(keep.kept == std::vector<int>{0, 1});
  CHECK(keep.stripped.flags.category);
  CHECK(keep.witness_verified);

  EnrichedStructure with_far = make_structure(
      trop, TypedSet{{"a", "b"}, {0, 0}}, {0, 4, 4, 4});
  REQUIRE(with_far.flags.totally_regular);
  StripResult drop = strip_isolated(with_far);
  CHECK(drop.kept == std::vector<int>{0});
  CHECK(drop.stripped.flags.category);
  CHECK(drop.witness_verified);
}

TEST_CASE("complete structures over the tropical base are completed metric spaces") {
  // A small structure is Cauchy complete exactly when it is equivalent to
  // the completion of its stripped (category) part.
  for (const EnrichedStructure& a :
       enumerate_structures(fixture_trop(4), 2, StructClass::totally_regular)) {
    StripResult strip = strip_isolated(a);
    REQUIRE(strip.stripped.flags.category);
    CompletionResult cc = cauchy_complete_trs(strip.stripped);
    CHECK(is_cauchy_complete_trs(cc.completed).complete);
    bool complete = is_cauchy_complete_trs(a).complete;
    bool matches =
        search_equivalence(a, cc.completed).status == SearchStatus::found;
    CHECK(complete == matches);
  }
}

TEST_CASE("categories over the two-chain strip to themselves") {
  for (const EnrichedStructure& a :
       enumerate_structures(fixture_q2(), 2, StructClass::category)) {
    StripResult res = strip_isolated(a);
    CHECK(res.kept.size() == static_cast<size_t>(a.obs.size()));
    CHECK(res.witness_verified);
    CHECK(structures_equal(res.stripped, a));
  }
}

TEST_CASE("budget verdicts are distinct from absence") {
  // Four objects exceed the structural bound.
  EnrichedStructure big = make_structure(
      fixture_q2(), TypedSet{{"a", "b", "c", "d"}, {0, 0, 0, 0}},
      {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  REQUIRE(big.flags.totally_regular);
  CHECK(search_isomorphism(big, big).status == SearchStatus::budget_exceeded);

  // A tiny step budget runs out before the scan finishes.
  SearchBudget tiny;
  tiny.max_steps = 1;
  EnrichedStructure c = c1();
  CHECK(search_isomorphism(c, c, tiny).status == SearchStatus::budget_exceeded);

  SearchBudget env = SearchBudget::from_env();
  CHECK(env.max_steps > 0);
}

TEST_CASE("searches demand a common base") {
  CHECK_THROWS_AS(search_isomorphism(s_m(), star_identity(fixture_q2(), 0)), input_error);
}
