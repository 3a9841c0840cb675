#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "qorder/enumerate.hpp"
#include "qorder/structures.hpp"

using namespace qorder;

namespace {

EnrichedStructure s_m() { return star_idempotent(fixture_q3(), ArrowRef{0, 0, 1}); }
EnrichedStructure c1() { return star_identity(fixture_q3(), 0); }

// Two objects over the two-chain, the second isolated.
EnrichedStructure isolated_q2() {
  return make_structure(fixture_q2(), TypedSet{{"a", "b"}, {0, 0}}, {1, 0, 0, 0});
}

// Regular but not totally regular: the first object is unstable.
EnrichedStructure regular_not_trs_q2() {
  return make_structure(fixture_q2(), TypedSet{{"a", "b"}, {0, 0}}, {0, 1, 0, 1});
}

}  // namespace

TEST_CASE("classification of the named one-object structures") {
  EnrichedStructure sm = s_m();
  CHECK(sm.flags.semicategory);
  CHECK(sm.flags.regular);
  CHECK(sm.flags.totally_regular);
  CHECK_FALSE(sm.flags.category);
  CHECK_FALSE(sm.flags.normal);

  EnrichedStructure two =
      make_structure(fixture_trop(4), singleton_typed(0), {2});
  CHECK(two.flags.semicategory);
  CHECK_FALSE(two.flags.regular);
  CHECK_FALSE(two.flags.totally_regular);

  EnrichedStructure c = c1();
  CHECK(c.flags.semicategory);
  CHECK(c.flags.regular);
  CHECK(c.flags.totally_regular);
  CHECK(c.flags.category);
  CHECK(c.flags.normal);
}

TEST_CASE("class flags form the implication chain") {
  for (const char* name : {"q2", "q3", "n3", "trop:4"}) {
    QuantaloidPtr q = fixture_by_name(name);
    for (const EnrichedStructure& s : enumerate_structures(q, 2, StructClass::any)) {
      if (s.flags.normal) CHECK(s.flags.category);
      if (s.flags.category) CHECK(s.flags.totally_regular);
      if (s.flags.totally_regular) CHECK(s.flags.regular);
      if (s.flags.regular) CHECK(s.flags.semicategory);
    }
  }
}

TEST_CASE("stable objects by the absorption formula") {
  CHECK(stable_objects(s_m()) == std::vector<int>{0});
  for (const EnrichedStructure& s :
       enumerate_structures(fixture_q3(), 2, StructClass::category)) {
    std::vector<int> all(s.obs.size());
    for (int i = 0; i < s.obs.size(); ++i) all[i] = i;
    CHECK(stable_objects(s) == all);
  }
  EnrichedStructure four = make_structure(fixture_trop(4), singleton_typed(0), {4});
  CHECK(stable_objects(four) == std::vector<int>{0});
  CHECK(stable_objects(regular_not_trs_q2()) == std::vector<int>{1});
  CHECK_THROWS_AS(
      stable_objects(make_structure(fixture_trop(4), singleton_typed(0), {2})),
      input_error);
}

TEST_CASE("stability routes agree on every small regular structure") {
  for (const char* name : {"q2", "q3", "n3"}) {
    QuantaloidPtr q = fixture_by_name(name);
    for (const EnrichedStructure& s : enumerate_structures(q, 2, StructClass::regular))
      CHECK(stable_objects(s) == stable_objects_by_pointing(s));
  }
}

TEST_CASE("semidistributor flags between the one-object structures") {
  const Quantaloid& q3 = *fixture_q3();
  EnrichedStructure sm = s_m(), c = c1();
  SemiDistributor good = make_semidistributor(sm, c, {1});
  CHECK(good.flags.semidistributor);
  CHECK(good.flags.regular);

  SemiDistributor bad = make_semidistributor(sm, c, {2});
  CHECK(bad.flags.semidistributor);
  CHECK_FALSE(bad.flags.regular);

  for (const EnrichedStructure& s :
       enumerate_structures(fixture_q3(), 2, StructClass::regular)) {
    SemiDistributor ident = identity_semidistributor(s);
    CHECK(ident.flags.regular);
  }
  (void)q3;
}

TEST_CASE("absorption shortcut matches the general route between stable ends") {
  for (const char* name : {"q2", "q3", "n3"}) {
    QuantaloidPtr q = fixture_by_name(name);
    auto corpus = enumerate_structures(q, 2, StructClass::totally_regular);
    for (size_t i = 0; i < corpus.size(); i += 3)
      for (size_t j = 0; j < corpus.size(); j += 3)
        for_each_matrix(*q, corpus[j].obs, corpus[i].obs, [&](const QMatrix& mat) {
          SemiDistFlags general = check_semidistributor(*q, corpus[i], corpus[j], mat);
          SemiDistFlags shortcut =
              check_semidistributor_absorption(*q, corpus[i], corpus[j], mat);
          CHECK(general.regular == shortcut.regular);
        });
  }
}

TEST_CASE("object map flags") {
  EnrichedStructure sm = s_m(), c = c1();
  ObjectMap ident = identity_map(sm);
  CHECK(ident.flags.regular_semifunctor);

  ObjectMap to_c = make_object_map(sm, c, {0});
  CHECK(to_c.flags.semifunctor);
  CHECK_FALSE(to_c.flags.functor);  // the source is not a category
  CHECK_FALSE(to_c.flags.regular_semifunctor);

  EnrichedStructure probe = star_idempotent(fixture_q3(), ArrowRef{0, 0, 1});
  ObjectMap gamma = make_object_map(probe, sm, {0});
  CHECK(gamma.flags.regular_semifunctor);

  // Absorption shortcut agrees.
  CHECK(check_object_map_absorption(sm, c, {0}).regular_semifunctor ==
        check_object_map(sm, c, {0}).regular_semifunctor);
}

TEST_CASE("type preservation is a hard precondition") {
  IdmQuantaloid idm = build_idm(fixture_q2());
  EnrichedStructure a = star_identity(idm.completed, 0);
  EnrichedStructure b = star_identity(idm.completed, 1);
  CHECK_THROWS_AS(make_object_map(a, b, {0}), input_error);
  CHECK_THROWS_AS(make_object_map(a, b, {5}), input_error);
}

TEST_CASE("induced matrices of the pointing and identity maps") {
  EnrichedStructure sm = s_m(), c = c1();
  auto [left, right] = induced_pair(identity_map(c));
  CHECK(matrices_equal(left.mat, c.hom));
  CHECK(matrices_equal(right.mat, c.hom));

  EnrichedStructure probe = star_idempotent(fixture_q3(), ArrowRef{0, 0, 1});
  auto [gl, gr] = induced_pair(make_object_map(probe, sm, {0}));
  CHECK(gl.mat.at(0, 0) == 1);
  CHECK(gr.mat.at(0, 0) == 1);
  CHECK(gl.flags.regular);
  CHECK(gr.flags.regular);
}

TEST_CASE("full subgraphs") {
  EnrichedStructure c = c1();
  Subgraph same = full_subgraph(c, {0});
  CHECK(structures_equal(same.sub, c));

  Subgraph stripped = full_subgraph(isolated_q2(), {0});
  CHECK(stripped.sub.flags.category);
  CHECK(stripped.embedding.flags.regular_semifunctor);

  // Over the truncated tropical base a full subgraph of a merely regular
  // structure can lose regularity; the flags stay honest.
  EnrichedStructure metric = make_structure(
      fixture_trop(4), TypedSet{{"a", "b"}, {0, 0}}, {2, 1, 1, 0});
  CHECK(metric.flags.regular);
  CHECK_FALSE(metric.flags.totally_regular);
  Subgraph corner = full_subgraph(metric, {0});
  CHECK(corner.sub.flags.semicategory);
  CHECK_FALSE(corner.sub.flags.regular);
}

TEST_CASE("full subgraphs of totally regular structures stay totally regular") {
  for (const char* name : {"q2", "q3", "n3"}) {
    QuantaloidPtr q = fixture_by_name(name);
    for (const EnrichedStructure& s :
         enumerate_structures(q, 2, StructClass::totally_regular)) {
      const int n = s.obs.size();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> objects;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) objects.push_back(i);
        Subgraph sub = full_subgraph(s, objects);
        CHECK(sub.sub.flags.totally_regular);
        CHECK(sub.embedding.flags.regular_semifunctor);
      }
    }
  }
}

TEST_CASE("map order and equivalence") {
  EnrichedStructure c2 = make_structure(fixture_q3(), TypedSet{{"a", "b"}, {0, 0}},
                                        {2, 2, 2, 2});
  REQUIRE(c2.flags.category);
  ObjectMap to_a = make_object_map(c2, c2, {0, 0});
  ObjectMap to_b = make_object_map(c2, c2, {1, 1});
  CHECK(map_leq(to_a, to_b));
  CHECK(map_equivalent(to_a, to_b));  // indiscrete homs
  ObjectMap ident = identity_map(c2);
  CHECK(map_equivalent(compose_maps(ident, to_a), to_a));

  EnrichedStructure diag = make_structure(fixture_q3(), TypedSet{{"a", "b"}, {0, 0}},
                                          {2, 0, 0, 2});
  ObjectMap da = make_object_map(diag, diag, {0, 0});
  ObjectMap db = make_object_map(diag, diag, {1, 1});
  CHECK_FALSE(map_leq(da, db));
  CHECK_FALSE(map_equivalent(da, db));
}

TEST_CASE("star constructors validate their arrow") {
  CHECK_THROWS_AS(star_idempotent(fixture_trop(4), ArrowRef{0, 0, 2}), input_error);
  EnrichedStructure star = star_identity(fixture_n3(), 0);
  CHECK(star.flags.normal);
  EnrichedStructure st = star_idempotent(fixture_n3(), ArrowRef{0, 0, 2});
  CHECK(st.flags.totally_regular);
  // The unit sits below t, so this is a (non-normal) category.
  CHECK(st.flags.category);
  CHECK_FALSE(st.flags.normal);
}
