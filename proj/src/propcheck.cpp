#include "qorder/propcheck.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qorder {

namespace {

std::string describe(const EnrichedStructure& s) {
  std::ostringstream os;
  os << s.base->name() << "[";
  for (int i = 0; i < s.obs.size(); ++i) {
    if (i) os << ",";
    os << s.base->object_name(s.obs.types[i]);
  }
  os << "](";
  for (size_t i = 0; i < s.hom.entries.size(); ++i) {
    if (i) os << ",";
    os << s.hom.entries[i];
  }
  os << ")";
  return os.str();
}

void fail(SuiteReport& rep, const std::string& msg) {
  rep.passed = false;
  if (rep.failures.size() < 64) rep.failures.push_back(msg);
}

std::vector<std::string> corpus_base_names() { return {"q2", "q3", "n3"}; }

std::vector<SemiDistributor> all_regular_semidists(const EnrichedStructure& a,
                                                   const EnrichedStructure& b) {
  const Quantaloid& q = *a.base;
  std::vector<SemiDistributor> out;
  for_each_matrix(q, b.obs, a.obs, [&](const QMatrix& mat) {
    SemiDistFlags flags = check_semidistributor(q, a, b, mat);
    if (flags.regular) out.push_back(SemiDistributor{a, b, mat, flags});
  });
  return out;
}

std::vector<ObjectMap> all_regular_semifunctors(const EnrichedStructure& a,
                                                const EnrichedStructure& b) {
  std::vector<ObjectMap> out;
  for_each_object_map(a, b, [&](const std::vector<int>& images) {
    MapFlags flags = check_object_map(a, b, images);
    if (flags.regular_semifunctor) out.push_back(ObjectMap{a, b, images, flags});
    return false;
  });
  return out;
}

}  // namespace

const std::vector<EnrichedStructure>& trs_corpus(const std::string& base, int max_objects) {
  static std::map<std::string, std::vector<EnrichedStructure>> cache;
  std::string key = base + "#" + std::to_string(max_objects);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  QuantaloidPtr q = fixture_by_name(base);
  if (!q) throw input_error("trs_corpus: unknown fixture " + base);
  auto [pos, _] =
      cache.emplace(key, enumerate_structures(q, max_objects, StructClass::totally_regular));
  return pos->second;
}

SuiteReport suite_lemma4() {
  SuiteReport rep;
  rep.name = "lemma4";
  for (const std::string& base : corpus_base_names()) {
    QuantaloidPtr q = fixture_by_name(base);
    for (const EnrichedStructure& s :
         enumerate_structures(q, 2, StructClass::regular)) {
      std::vector<int> direct = stable_objects(s);
      std::vector<int> pointed = stable_objects_by_pointing(s);
      ++rep.checked;
      if (direct != pointed)
        fail(rep, "stability routes disagree on " + describe(s));
    }
  }
  return rep;
}

SuiteReport suite_lemma13() {
  SuiteReport rep;
  rep.name = "lemma13";
  for (const std::string& base : {std::string("q2"), std::string("q3")}) {
    const auto& corpus = trs_corpus(base, 2);
    for (const EnrichedStructure& b : corpus) {
      bool one_object_verdict = is_cauchy_complete_trs(b).complete;
      bool full_verdict = true;
      const Quantaloid& q = *b.base;
      for (const EnrichedStructure& a : corpus) {
        if (!full_verdict) break;
        for_each_matrix(q, b.obs, a.obs, [&](const QMatrix& mat) {
          if (!full_verdict) return;
          SemiDistFlags flags = check_semidistributor(q, a, b, mat);
          if (!flags.regular) return;
          auto adj = is_left_adjoint(SemiDistributor{a, b, mat, flags});
          if (!adj) return;
          if (!converges(*adj)) full_verdict = false;
        });
      }
      ++rep.checked;
      if (one_object_verdict != full_verdict)
        fail(rep, "one-object and full completeness verdicts disagree on " + describe(b));
    }
  }
  return rep;
}

SuiteReport suite_prop15() {
  SuiteReport rep;
  rep.name = "prop15";
  for (const std::string& base : corpus_base_names())
    for (const EnrichedStructure& b : trs_corpus(base, 2)) {
      CompletionResult c = cauchy_complete_trs(b);
      YonedaReport y = yoneda_check(b, c);
      ++rep.checked;
      if (!y.ok)
        for (const auto& f : y.failures) fail(rep, describe(b) + ": " + f);
    }
  return rep;
}

SuiteReport suite_prop16() {
  SuiteReport rep;
  rep.name = "prop16";
  for (const std::string& base : corpus_base_names())
    for (const EnrichedStructure& b : trs_corpus(base, 2)) {
      CompletionResult c = cauchy_complete_trs(b);
      ++rep.checked;
      if (!c.embed_total) {
        fail(rep, describe(b) + ": embedding undefined");
        continue;
      }
      auto [into, from] = induced_pair(c.embed);
      if (!is_inverse_pair(into, from))
        fail(rep, describe(b) + ": the embedding pair is not an inverse pair");
    }
  return rep;
}

SuiteReport suite_prop17() {
  SuiteReport rep;
  rep.name = "prop17";
  for (const std::string& base : corpus_base_names())
    for (const EnrichedStructure& b : trs_corpus(base, 2)) {
      CompletionResult c = cauchy_complete_trs(b);
      ++rep.checked;
      if (!c.completed.flags.totally_regular)
        fail(rep, describe(b) + ": completion is not totally regular");
      else if (!is_cauchy_complete_trs(c.completed).complete)
        fail(rep, describe(b) + ": completion is not Cauchy complete");
    }
  return rep;
}

SuiteReport suite_prop18(std::uint64_t seed) {
  SuiteReport rep;
  rep.name = "prop18";
  Rng rng(seed);
  std::vector<EnrichedStructure> corpus;
  for (const std::string& base : corpus_base_names())
    for (const EnrichedStructure& s : trs_corpus(base, 2)) corpus.push_back(s);

  std::map<const EnrichedStructure*, CompletionResult> completions;
  auto completion_of = [&](const EnrichedStructure& s) -> const CompletionResult& {
    auto it = completions.find(&s);
    if (it == completions.end()) it = completions.emplace(&s, cauchy_complete_trs(s)).first;
    return it->second;
  };

  const int wanted = 50;
  int attempts = 0;
  while (rep.checked < wanted && attempts < 5000) {
    ++attempts;
    const EnrichedStructure& a = corpus[rng.below(corpus.size())];
    const EnrichedStructure& d = corpus[rng.below(corpus.size())];
    if (a.base->name() != d.base->name()) continue;
    const CompletionResult& bcc = completion_of(d);
    const EnrichedStructure& b = bcc.completed;
    const CompletionResult& acc = completion_of(a);

    double scan = 1.0;
    for (int i = 0; i < acc.completed.obs.size(); ++i) scan *= std::max(1, b.obs.size());
    if (scan > 200000.0) continue;

    std::vector<ObjectMap> fs = all_regular_semifunctors(a, b);
    if (fs.empty()) continue;
    const ObjectMap& f = fs[rng.below(fs.size())];

    ObjectMap g = factor_through_completion(f, acc, false);
    ++rep.checked;
    if (!g.flags.regular_semifunctor)
      fail(rep, "factorization is not a regular semifunctor for " + describe(a));
    if (!map_equivalent(compose_maps(acc.embed, g), f))
      fail(rep, "factorization does not restrict to the sampled map for " + describe(a));
    for_each_object_map(acc.completed, b, [&](const std::vector<int>& images) {
      MapFlags flags = check_object_map(acc.completed, b, images);
      if (!flags.regular_semifunctor) return false;
      ObjectMap h{acc.completed, b, images, flags};
      if (!map_equivalent(compose_maps(acc.embed, h), f)) return false;
      if (!map_equivalent(h, g))
        fail(rep, "a second inequivalent factorization exists for " + describe(a));
      return false;
    });
  }
  rep.notes.push_back("samples: " + std::to_string(rep.checked));
  if (rep.checked < wanted) {
    fail(rep, "could not draw enough samples");
  }
  return rep;
}

SuiteReport suite_prop19(std::uint64_t seed) {
  SuiteReport rep;
  rep.name = "prop19";
  Rng rng(seed);
  auto run_pair = [&rep](const EnrichedStructure& a, const EnrichedStructure& b) {
    MoritaReport mr = prop19_check(a, b);
    ++rep.checked;
    if (mr.iso.status == SearchStatus::budget_exceeded ||
        mr.equivalence.status == SearchStatus::budget_exceeded)
      fail(rep, "budget exceeded on (" + describe(a) + ", " + describe(b) + ")");
    else if (!mr.consistent)
      fail(rep, "iso/equivalence verdicts disagree on (" + describe(a) + ", " +
                    describe(b) + ")");
  };
  const auto& q2corpus = trs_corpus("q2", 2);
  for (const EnrichedStructure& a : q2corpus)
    for (const EnrichedStructure& b : q2corpus) run_pair(a, b);
  const auto& q3corpus = trs_corpus("q3", 2);
  for (int i = 0; i < 40; ++i) {
    const EnrichedStructure& a = q3corpus[rng.below(q3corpus.size())];
    const EnrichedStructure& b = q3corpus[rng.below(q3corpus.size())];
    run_pair(a, b);
  }
  return rep;
}

SuiteReport suite_prop23(std::uint64_t seed) {
  SuiteReport rep;
  rep.name = "prop23";
  Rng rng(seed);
  for (const std::string& base : {std::string("q2"), std::string("q3")}) {
    QuantaloidPtr q = fixture_by_name(base);
    IdmQuantaloid idm = build_idm(q);
    const auto& corpus = trs_corpus(base, 2);

    // Round trips are table-identical and land on normal categories.
    std::vector<ReshuffleWitness> witnesses;
    witnesses.reserve(corpus.size());
    for (const EnrichedStructure& a : corpus) {
      ReshuffleWitness w = reshuffle(a, idm);
      ++rep.checked;
      if (!w.target.flags.normal)
        fail(rep, "reshuffle target is not normal for " + describe(a));
      EnrichedStructure back = unreshuffle(w.target, idm);
      if (!structures_equal(back, a))
        fail(rep, "round trip differs for " + describe(a));
      ReshuffleWitness again = reshuffle(back, idm);
      if (!structures_equal(again.target, w.target))
        fail(rep, "second reshuffle differs for " + describe(a));
      witnesses.push_back(std::move(w));
    }

    // Every normal category over the completed base is hit.
    for (const EnrichedStructure& c :
         enumerate_structures(idm.completed, 2, StructClass::normal_category)) {
      EnrichedStructure a = unreshuffle(c, idm);
      ++rep.checked;
      if (!a.flags.totally_regular)
        fail(rep, "unreshuffle output is not totally regular for " + describe(c));
      else if (!structures_equal(reshuffle(a, idm).target, c))
        fail(rep, "normal category is not in the reshuffle image: " + describe(c));
    }

    // Composition, suprema, order and adjointness transport exactly.
    const int triples = base == "q2" ? 12 : 18;
    for (int t = 0; t < triples; ++t) {
      size_t ia = rng.below(corpus.size());
      size_t ib = rng.below(corpus.size());
      size_t ic = rng.below(corpus.size());
      const EnrichedStructure &a = corpus[ia], &b = corpus[ib], &c = corpus[ic];
      const ReshuffleWitness &wa = witnesses[ia], &wb = witnesses[ib], &wc = witnesses[ic];
      std::vector<SemiDistributor> ab = all_regular_semidists(a, b);
      std::vector<SemiDistributor> bc = all_regular_semidists(b, c);

      for (const SemiDistributor& phi : ab) {
        QMatrix phi_hat = reshuffle_matrix(phi.mat, a, b, wa, wb, idm);
        SemiDistributor phi_hat_sd =
            make_semidistributor(wa.target, wb.target, phi_hat);
        ++rep.checked;
        if (!phi_hat_sd.flags.regular)
          fail(rep, "reshuffled matrix is not a distributor for " + describe(a));
        bool adj = is_left_adjoint(phi).has_value();
        bool adj_hat = is_left_adjoint(phi_hat_sd).has_value();
        if (adj != adj_hat)
          fail(rep, "adjointness does not transport for " + describe(a) + " -> " +
                        describe(b));
        for (const SemiDistributor& psi : bc) {
          QMatrix lhs = reshuffle_matrix(compose(*q, psi.mat, phi.mat), a, c, wa, wc, idm);
          QMatrix rhs = compose(*idm.completed,
                                reshuffle_matrix(psi.mat, b, c, wb, wc, idm), phi_hat);
          if (!matrices_equal(lhs, rhs))
            fail(rep, "composition does not transport for " + describe(a));
        }
      }
      for (size_t i = 0; i + 1 < ab.size(); ++i) {
        const QMatrix& x = ab[i].mat;
        const QMatrix& y = ab[i + 1].mat;
        QMatrix both[2] = {x, y};
        QMatrix s = sup(*q, both);
        QMatrix x_hat = reshuffle_matrix(x, a, b, wa, wb, idm);
        QMatrix y_hat = reshuffle_matrix(y, a, b, wa, wb, idm);
        QMatrix both_hat[2] = {x_hat, y_hat};
        if (!matrices_equal(reshuffle_matrix(s, a, b, wa, wb, idm),
                            sup(*idm.completed, both_hat)))
          fail(rep, "suprema do not transport for " + describe(a));
        if (leq_matrix(*q, x, y) != leq_matrix(*idm.completed, x_hat, y_hat) ||
            leq_matrix(*q, y, x) != leq_matrix(*idm.completed, y_hat, x_hat))
          fail(rep, "order does not transport for " + describe(a));
      }
    }

    // Completeness agrees across the change of base.
    size_t stride = base == "q2" ? 1 : 3;
    for (size_t i = 0; i < corpus.size(); i += stride) {
      bool trs_side = is_cauchy_complete_trs(corpus[i]).complete;
      bool cat_side = is_cauchy_complete_cat(witnesses[i].target).complete;
      ++rep.checked;
      if (trs_side != cat_side)
        fail(rep, "completeness does not transport for " + describe(corpus[i]));
    }
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"lemma4", "lemma13", "prop15", "prop16", "prop17", "prop18", "prop19", "prop23"};
}

SuiteReport run_suite(const std::string& id, std::uint64_t seed) {
  if (id == "lemma4") return suite_lemma4();
  if (id == "lemma13") return suite_lemma13();
  if (id == "prop15") return suite_prop15();
  if (id == "prop16") return suite_prop16();
  if (id == "prop17") return suite_prop17();
  if (id == "prop18") return suite_prop18(seed);
  if (id == "prop19") return suite_prop19(seed);
  if (id == "prop23") return suite_prop23(seed);
  throw input_error("unknown property suite: " + id);
}

}  // namespace qorder
