#include "qorder/morita.hpp"

#include <cstdlib>

namespace qorder {

SearchBudget SearchBudget::from_env() {
  SearchBudget b;
  if (const char* env = std::getenv("QORDER_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.max_steps = v;
  }
  return b;
}

bool is_inverse_pair(const SemiDistributor& forward, const SemiDistributor& backward) {
  const Quantaloid& q = *forward.dom.base;
  if (!same_typing(forward.dom.obs, backward.cod.obs) ||
      !same_typing(forward.cod.obs, backward.dom.obs))
    throw input_error("is_inverse_pair: shapes do not match");
  return matrices_equal(compose(q, backward.mat, forward.mat), forward.dom.hom) &&
         matrices_equal(compose(q, forward.mat, backward.mat), forward.cod.hom);
}

namespace {

bool within_structural_budget(const EnrichedStructure& a, const EnrichedStructure& b,
                              const SearchBudget& budget) {
  if (a.obs.size() > budget.max_objects || b.obs.size() > budget.max_objects) return false;
  const Quantaloid& q = *a.base;
  for (int x = 0; x < a.obs.size(); ++x)
    for (int y = 0; y < b.obs.size(); ++y) {
      if (q.hom(a.obs.types[x], b.obs.types[y]).size() > budget.max_hom_elems) return false;
      if (q.hom(b.obs.types[y], a.obs.types[x]).size() > budget.max_hom_elems) return false;
    }
  return true;
}

// Odometer over all matrices with the given row/column typed sets; fn returns
// true to stop. Returns false when the step budget ran out first.
template <typename Fn>
bool for_each_matrix_budgeted(const Quantaloid& q, const TypedSet& rows,
                              const TypedSet& cols, long long& steps_left, Fn&& fn) {
  const int total = rows.size() * cols.size();
  std::vector<Elem> entries(total, 0);
  std::vector<int> sizes(total);
  for (int r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols.size(); ++c)
      sizes[r * cols.size() + c] = q.hom(cols.types[c], rows.types[r]).size();
  while (true) {
    if (steps_left-- <= 0) return false;
    if (fn(entries)) return true;
    int pos = total - 1;
    while (pos >= 0 && entries[pos] + 1 >= sizes[pos]) {
      entries[pos] = 0;
      --pos;
    }
    if (pos < 0) return true;
    ++entries[pos];
  }
}

}  // namespace

IsoSearchResult search_isomorphism(const EnrichedStructure& a, const EnrichedStructure& b,
                                   const SearchBudget& budget) {
  if (a.base.get() != b.base.get() &&
      (a.base->name().empty() || a.base->name() != b.base->name()))
    throw input_error("search_isomorphism: different bases");
  IsoSearchResult result;
  if (!within_structural_budget(a, b, budget)) {
    result.status = SearchStatus::budget_exceeded;
    return result;
  }
  const Quantaloid& q = *a.base;
  long long steps_left = budget.max_steps;
  bool finished = for_each_matrix_budgeted(
      q, b.obs, a.obs, steps_left, [&](const std::vector<Elem>& entries) {
        QMatrix mat{b.obs, a.obs, entries};
        SemiDistFlags flags = check_semidistributor(q, a, b, mat);
        if (!flags.regular) return false;
        SemiDistributor forward{a, b, mat, flags};
        // An inverse is in particular the right adjoint, which is unique,
        // so only the canonical candidate needs to be examined.
        QMatrix cand = right_adjoint_candidate(q, a, b, mat);
        SemiDistributor backward = make_semidistributor(b, a, cand);
        if (!backward.flags.regular) return false;
        if (!is_inverse_pair(forward, backward)) return false;
        result.status = SearchStatus::found;
        result.witness = IsoWitness{std::move(forward), std::move(backward)};
        return true;
      });
  if (!finished) result.status = SearchStatus::budget_exceeded;
  return result;
}

namespace {

// Odometer over type-preserving object maps; fn returns true to stop.
// Returns false when the step budget ran out first.
template <typename Fn>
bool for_each_type_preserving_map(const EnrichedStructure& a, const EnrichedStructure& b,
                                  long long& steps_left, Fn&& fn) {
  const int n = a.obs.size();
  std::vector<std::vector<int>> candidates(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < b.obs.size(); ++y)
      if (b.obs.types[y] == a.obs.types[x]) candidates[x].push_back(y);
    if (candidates[x].empty()) return true;  // no maps at all
  }
  std::vector<size_t> pick(n, 0);
  while (true) {
    if (steps_left-- <= 0) return false;
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[x] = candidates[x][pick[x]];
    if (fn(images)) return true;
    int pos = n - 1;
    while (pos >= 0 && pick[pos] + 1 >= candidates[pos].size()) {
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) return true;
    ++pick[pos];
  }
}

}  // namespace

EquivSearchResult search_equivalence(const EnrichedStructure& a, const EnrichedStructure& b,
                                     const SearchBudget& budget) {
  if (a.base.get() != b.base.get() &&
      (a.base->name().empty() || a.base->name() != b.base->name()))
    throw input_error("search_equivalence: different bases");
  EquivSearchResult result;
  long long steps_left = budget.max_steps;
  bool finished = for_each_type_preserving_map(
      a, b, steps_left, [&](const std::vector<int>& f_images) {
        MapFlags ff = check_object_map(a, b, f_images);
        if (!ff.regular_semifunctor) return false;
        ObjectMap f{a, b, f_images, ff};
        bool stop = false;
        bool inner_done = for_each_type_preserving_map(
            b, a, steps_left, [&](const std::vector<int>& g_images) {
              MapFlags gf = check_object_map(b, a, g_images);
              if (!gf.regular_semifunctor) return false;
              ObjectMap g{b, a, g_images, gf};
              if (!map_equivalent(compose_maps(f, g), identity_map(a))) return false;
              if (!map_equivalent(compose_maps(g, f), identity_map(b))) return false;
              result.status = SearchStatus::found;
              result.witness = EquivWitness{f, std::move(g)};
              stop = true;
              return true;
            });
        if (!inner_done) {
          result.status = SearchStatus::budget_exceeded;
          stop = true;
        }
        return stop;
      });
  if (!finished) result.status = SearchStatus::budget_exceeded;
  return result;
}

MoritaReport prop19_check(const EnrichedStructure& a, const EnrichedStructure& b,
                          const SearchBudget& budget) {
  if (!a.flags.totally_regular || !b.flags.totally_regular)
    throw input_error("prop19_check: both structures must be totally regular");
  MoritaReport report;
  report.iso = search_isomorphism(a, b, budget);
  CompletionResult ca = cauchy_complete_trs(a);
  CompletionResult cb = cauchy_complete_trs(b);
  report.equivalence = search_equivalence(ca.completed, cb.completed, budget);
  report.consistent =
      report.iso.status != SearchStatus::budget_exceeded &&
      report.equivalence.status != SearchStatus::budget_exceeded &&
      (report.iso.status == SearchStatus::found) ==
          (report.equivalence.status == SearchStatus::found);
  return report;
}

StripResult strip_isolated(const EnrichedStructure& a) {
  const std::string& base = a.base->name();
  const bool allowed = base == "q2" || base.rfind("trop:", 0) == 0;
  if (!allowed)
    throw input_error("strip_isolated: only valid over the q2 and trop bases");
  if (!a.flags.totally_regular)
    throw input_error("strip_isolated: structure is not totally regular");
  const Quantaloid& q = *a.base;

  std::vector<int> kept;
  for (int x = 0; x < a.obs.size(); ++x) {
    Obj t = a.obs.types[x];
    if (q.hom(t, t).leq(q.id(t), a.hom.at(x, x))) kept.push_back(x);
  }
  Subgraph sub = full_subgraph(a, kept);

  QMatrix fwd;  // a(-, i -) : stripped -|-> a
  fwd.rows = a.obs;
  fwd.cols = sub.sub.obs;
  fwd.entries.assign(static_cast<size_t>(a.obs.size()) * kept.size(), 0);
  for (int r = 0; r < a.obs.size(); ++r)
    for (size_t c = 0; c < kept.size(); ++c)
      fwd.at(r, static_cast<int>(c)) = a.hom.at(r, kept[c]);
  QMatrix bwd;  // a(i -, -) : a -|-> stripped
  bwd.rows = sub.sub.obs;
  bwd.cols = a.obs;
  bwd.entries.assign(static_cast<size_t>(kept.size()) * a.obs.size(), 0);
  for (size_t r = 0; r < kept.size(); ++r)
    for (int c = 0; c < a.obs.size(); ++c)
      bwd.at(static_cast<int>(r), c) = a.hom.at(kept[r], c);

  StripResult out;
  out.kept = kept;
  out.witness = IsoWitness{make_semidistributor(sub.sub, a, std::move(fwd)),
                           make_semidistributor(a, sub.sub, std::move(bwd))};
  out.witness_verified = is_inverse_pair(out.witness.forward, out.witness.backward);
  out.stripped = std::move(sub.sub);
  return out;
}

}  // namespace qorder
