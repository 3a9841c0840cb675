#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qorder/enumerate.hpp"
#include "qorder/morita.hpp"

using namespace qorder;

namespace {

EnrichedStructure s_m() { return star_idempotent(fixture_q3(), ArrowRef{0, 0, 1}); }
EnrichedStructure c1() { return star_identity(fixture_q3(), 0); }

SemiDistributor probe(const EnrichedStructure& dom, const EnrichedStructure& cod,
                      std::vector<Elem> entries) {
  return make_semidistributor(dom, cod, std::move(entries));
}

}  // namespace

TEST_CASE("canonical right adjoint candidates") {
  const Quantaloid& q3 = *fixture_q3();
  EnrichedStructure sm = s_m(), c = c1();
  EnrichedStructure star0 = star_idempotent(fixture_q3(), ArrowRef{0, 0, 0});

  QMatrix phi_m = make_matrix(q3, c.obs, sm.obs, {1});
  CHECK(right_adjoint_candidate(q3, sm, c, phi_m).at(0, 0) == 1);

  QMatrix phi_0 = make_matrix(q3, c.obs, star0.obs, {0});
  CHECK(right_adjoint_candidate(q3, star0, c, phi_0).at(0, 0) == 0);

  // The raw residual and the regularized candidate agree between categories.
  for (const char* name : {"q2", "q3", "n3"}) {
    QuantaloidPtr q = fixture_by_name(name);
    for (const EnrichedStructure& s : enumerate_structures(q, 2, StructClass::category)) {
      CHECK(matrices_equal(right_adjoint_candidate(*q, s, s, s.hom),
                           right_adjoint_candidate(*q, s, s, s.hom, true)));
      CHECK(matrices_equal(right_adjoint_candidate(*q, s, s, s.hom), s.hom));
    }
  }
}

TEST_CASE("left adjoint detection on the one-object examples") {
  EnrichedStructure sm = s_m(), c = c1();
  auto pair_m = is_left_adjoint(probe(sm, c, {1}));
  REQUIRE(pair_m.has_value());
  CHECK(pair_m->right.mat.at(0, 0) == 1);

  EnrichedStructure star0 = star_idempotent(fixture_q3(), ArrowRef{0, 0, 0});
  CHECK(is_left_adjoint(probe(star0, c, {0})).has_value());

  // Not regular, so rejected before any adjointness test.
  CHECK_FALSE(is_left_adjoint(probe(sm, sm, {2})).has_value());
}

TEST_CASE("columns of a category are adjoint probes that converge to pointing") {
  for (const char* name : {"q2", "q3", "n3"}) {
    QuantaloidPtr q = fixture_by_name(name);
    for (const EnrichedStructure& b :
         enumerate_structures(q, 2, StructClass::totally_regular)) {
      for (int x = 0; x < b.obs.size(); ++x) {
        EnrichedStructure dom =
            star_idempotent(q, ArrowRef{b.obs.types[x], b.obs.types[x], b.hom.at(x, x)});
        std::vector<Elem> column(b.obs.size());
        for (int y = 0; y < b.obs.size(); ++y) column[y] = b.hom.at(y, x);
        auto adj = is_left_adjoint(probe(dom, b, std::move(column)));
        REQUIRE(adj.has_value());
        auto map = converges(*adj);
        REQUIRE(map.has_value());
        CHECK(map->flags.regular_semifunctor);
        CHECK(b.hom.at(map->images[0], map->images[0]) == b.hom.at(x, x));
      }
    }
  }
}

TEST_CASE("adjoint detection agrees with the partner scan") {
  for (const char* name : {"q2", "q3", "n3"}) {
    QuantaloidPtr q = fixture_by_name(name);
    auto corpus = enumerate_structures(q, 2, StructClass::totally_regular);
    size_t stride = name == std::string("q2") ? 1 : 4;
    for (size_t i = 0; i < corpus.size(); i += stride)
      for (size_t j = 0; j < corpus.size(); j += stride)
        for_each_matrix(*q, corpus[j].obs, corpus[i].obs, [&](const QMatrix& mat) {
          SemiDistFlags flags = check_semidistributor(*q, corpus[i], corpus[j], mat);
          if (!flags.regular) return;
          SemiDistributor phi{corpus[i], corpus[j], mat, flags};
          auto fast = is_left_adjoint(phi);
          auto slow = oracle::right_adjoint_scan(phi);
          CHECK(fast.has_value() == slow.has_value());
          if (fast && slow) CHECK(matrices_equal(fast->right.mat, *slow));
        });
  }
}

TEST_CASE("the one-object identity distributor converges to the identity") {
  EnrichedStructure c = c1();
  auto adj = is_left_adjoint(identity_semidistributor(c));
  REQUIRE(adj.has_value());
  auto map = converges(*adj);
  REQUIRE(map.has_value());
  CHECK(map->images == std::vector<int>{0});
}

TEST_CASE("the one-object three-chain category separates the two completeness notions") {
  EnrichedStructure c = c1();
  CHECK(is_cauchy_complete_cat(c).complete);
  CompletenessReport trs = is_cauchy_complete_trs(c);
  CHECK_FALSE(trs.complete);
  bool middle_witness = false;
  for (const ProbeEntry& w : trs.failures)
    if (w.idem.elem == 1 && w.probe.at(0, 0) == 1) middle_witness = true;
  CHECK(middle_witness);
}

TEST_CASE("the bottom one-object structure over the two-chain is complete") {
  EnrichedStructure bottom = star_idempotent(fixture_q2(), ArrowRef{0, 0, 0});
  CHECK(is_cauchy_complete_trs(bottom).complete);
}

TEST_CASE("a discrete two-object category over the powerset base is incomplete") {
  EnrichedStructure d = make_structure(fixture_p2(), TypedSet{{"a", "b"}, {0, 0}},
                                       {3, 0, 0, 3});
  REQUIRE(d.flags.category);
  CompletenessReport rep = is_cauchy_complete_cat(d);
  CHECK_FALSE(rep.complete);
  REQUIRE_FALSE(rep.failures.empty());
  // The completion glues the two atoms: four objects in total.
  CompletionResult cc = cauchy_complete_cat(d);
  CHECK(cc.completed.obs.size() == 4);
  CHECK(cc.completed.flags.category);
  CHECK(is_cauchy_complete_cat(cc.completed).complete);

  // Completing the complete structure again gives an equivalent category.
  CompletionResult again = cauchy_complete_cat(cc.completed);
  CHECK(search_equivalence(cc.completed, again.completed).status ==
        SearchStatus::found);
}

TEST_CASE("completion of the one-object three-chain category") {
  EnrichedStructure c = c1();
  CompletionResult cc = cauchy_complete_trs(c);
  REQUIRE(cc.completed.obs.size() == 3);
  // Probes arrive bottom to top, so hom(phi_i, phi_j) = min(i, j).
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(cc.completed.hom.at(i, j) == std::min(i, j));
  CHECK(cc.embed.images == std::vector<int>{2});
  CHECK(cc.completed.flags.totally_regular);
  CHECK_FALSE(cc.completed.flags.category);  // hom(phi_m, phi_m) = m
  CHECK(is_cauchy_complete_trs(cc.completed).complete);

  // The same structure completed with identity probes stays a one-object
  // category equivalent to itself.
  CompletionResult cat_cc = cauchy_complete_cat(c);
  CHECK(cat_cc.completed.obs.size() == 1);
  CHECK(cat_cc.completed.flags.category);
  CHECK(is_cauchy_complete_cat(cat_cc.completed).complete);
}

TEST_CASE("completion of the middle idempotent structure") {
  CompletionResult cc = cauchy_complete_trs(s_m());
  REQUIRE(cc.completed.obs.size() == 2);
  CHECK(cc.completed.hom.entries == std::vector<Elem>{0, 0, 0, 1});
  CHECK(cc.embed.images == std::vector<int>{1});
}

TEST_CASE("completion of the isolated two-object example") {
  EnrichedStructure b =
      make_structure(fixture_q2(), TypedSet{{"a", "b"}, {0, 0}}, {1, 0, 0, 0});
  CompletionResult cc = cauchy_complete_trs(b);
  // The stripped category's completion plus the bottom probe.
  REQUIRE(cc.completed.obs.size() == 2);
  CHECK(cc.completed.hom.entries == std::vector<Elem>{0, 0, 0, 1});
  CHECK(cc.embed.images == std::vector<int>{1, 0});
  CHECK(yoneda_check(b, cc).ok);

  EnrichedStructure stripped = full_subgraph(b, {0}).sub;
  CompletionResult scc = cauchy_complete_trs(stripped);
  CHECK(matrices_equal(scc.completed.hom, cc.completed.hom));
}

TEST_CASE("the one-object two-chain category completes to itself") {
  EnrichedStructure star = star_identity(fixture_q2(), 0);
  CompletionResult cc = cauchy_complete_cat(star);
  REQUIRE(cc.completed.obs.size() == 1);
  CHECK(cc.completed.hom.at(0, 0) == 1);
}

TEST_CASE("yoneda equalities on the three-chain completion") {
  EnrichedStructure c = c1();
  CompletionResult cc = cauchy_complete_trs(c);
  YonedaReport rep = yoneda_check(c, cc);
  CHECK(rep.ok);
  // hom(k *, phi_m) = m = the probe's value at *.
  CHECK(cc.completed.hom.at(cc.embed.images[0], 1) == 1);
}

TEST_CASE("the completion recipe on a merely regular structure") {
  EnrichedStructure b =
      make_structure(fixture_q2(), TypedSet{{"a", "b"}, {0, 0}}, {0, 1, 0, 1});
  REQUIRE(b.flags.regular);
  REQUIRE_FALSE(b.flags.totally_regular);
  CHECK_THROWS_AS(cauchy_complete_trs(b), input_error);
  CompletionResult cc = complete_by_probes(b, ProbeKind::idempotent_homs);
  CHECK(cc.completed.flags.totally_regular);
  // The candidate embedding exists here but is not fully faithful.
  YonedaReport rep = yoneda_check(b, cc);
  CHECK_FALSE(rep.ok);
}

TEST_CASE("probe domains with equal traces can make the completion non-skeletal") {
  EnrichedStructure bt = star_idempotent(fixture_n3(), ArrowRef{0, 0, 2});
  CompletionResult cc = cauchy_complete_trs(bt);
  REQUIRE(cc.completed.obs.size() == 3);
  CHECK(cc.completed.hom.entries == std::vector<Elem>{0, 0, 0, 0, 2, 2, 0, 2, 2});
  CompletionResult sk = skeletalize(cc);
  REQUIRE(sk.completed.obs.size() == 2);
  CHECK(sk.completed.hom.entries == std::vector<Elem>{0, 0, 0, 2});
  CHECK(sk.embed.images == std::vector<int>{1});
  CHECK(yoneda_check(bt, cc).ok);
}

TEST_CASE("factorization through the completion") {
  EnrichedStructure c = c1();
  CompletionResult cc = cauchy_complete_trs(c);
  ObjectMap k = cc.embed;
  ObjectMap g = factor_through_completion(k, cc, true);
  CHECK(map_equivalent(g, identity_map(cc.completed)));

  // Every regular semifunctor from the middle-idempotent structure into the
  // completed three-chain factors, essentially uniquely.
  EnrichedStructure sm = s_m();
  CompletionResult sm_cc = cauchy_complete_trs(sm);
  std::vector<ObjectMap> maps;
  for_each_object_map(sm, cc.completed, [&](const std::vector<int>& images) {
    MapFlags flags = check_object_map(sm, cc.completed, images);
    if (flags.regular_semifunctor) maps.push_back(ObjectMap{sm, cc.completed, images, flags});
    return false;
  });
  REQUIRE_FALSE(maps.empty());
  for (const ObjectMap& f : maps) {
    ObjectMap g2 = factor_through_completion(f, sm_cc, false);
    CHECK(g2.flags.regular_semifunctor);
    CHECK(map_equivalent(compose_maps(sm_cc.embed, g2), f));
    for_each_object_map(sm_cc.completed, cc.completed, [&](const std::vector<int>& images) {
      MapFlags flags = check_object_map(sm_cc.completed, cc.completed, images);
      if (!flags.regular_semifunctor) return false;
      ObjectMap h{sm_cc.completed, cc.completed, images, flags};
      if (map_equivalent(compose_maps(sm_cc.embed, h), f)) CHECK(map_equivalent(h, g2));
      return false;
    });
  }

  // Factoring into an incomplete target is refused.
  CHECK_THROWS_AS(factor_through_completion(identity_map(c), cc, true), input_error);
}

TEST_CASE("left adjoints assembled from probe columns match the full scan") {
  for (const char* name : {"q2", "q3", "n3"}) {
    QuantaloidPtr q = fixture_by_name(name);
    auto corpus = enumerate_structures(q, 2, StructClass::totally_regular);
    size_t stride = name == std::string("q2") ? 1 : 5;
    for (size_t i = 0; i < corpus.size(); i += stride)
      for (size_t j = 0; j < corpus.size(); j += stride) {
        std::vector<SemiDistributor> fast = enumerate_left_adjoints(corpus[i], corpus[j]);
        std::vector<QMatrix> slow = oracle::left_adjoints_scan(corpus[i], corpus[j]);
        REQUIRE(fast.size() == slow.size());
        for (const QMatrix& m : slow) {
          bool found = false;
          for (const SemiDistributor& sd : fast)
            if (matrices_equal(sd.mat, m)) found = true;
          CHECK(found);
        }
      }
  }
  EnrichedStructure sm = s_m(), c = c1();
  std::vector<SemiDistributor> adj = enumerate_left_adjoints(sm, c);
  REQUIRE(adj.size() == 1);
  CHECK(adj[0].mat.at(0, 0) == 1);
}

TEST_CASE("regular semifunctors induce adjoint pairs") {
  for (const char* name : {"q2", "q3"}) {
    QuantaloidPtr q = fixture_by_name(name);
    auto corpus = enumerate_structures(q, 2, StructClass::totally_regular);
    size_t stride = name == std::string("q2") ? 1 : 4;
    for (size_t i = 0; i < corpus.size(); i += stride)
      for (size_t j = 0; j < corpus.size(); j += stride)
        for_each_object_map(corpus[i], corpus[j], [&](const std::vector<int>& images) {
          MapFlags flags = check_object_map(corpus[i], corpus[j], images);
          if (!flags.regular_semifunctor) return false;
          ObjectMap f{corpus[i], corpus[j], images, flags};
          auto [left, right] = induced_pair(f);
          auto adj = is_left_adjoint(left);
          REQUIRE(adj.has_value());
          CHECK(matrices_equal(adj->right.mat, right.mat));
          return false;
        });
  }
}

TEST_CASE("probe sweeps demand the right structure class") {
  EnrichedStructure sm = s_m();
  CHECK_THROWS_AS(is_cauchy_complete_cat(sm), input_error);
  EnrichedStructure two = make_structure(fixture_trop(4), singleton_typed(0), {2});
  CHECK_THROWS_AS(is_cauchy_complete_trs(two), input_error);
  CHECK_THROWS_AS(cauchy_complete_cat(sm), input_error);
}
