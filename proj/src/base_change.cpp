#include "qorder/base_change.hpp"

namespace qorder {

namespace {

bool same_base(const QuantaloidPtr& a, const QuantaloidPtr& b) {
  if (a.get() == b.get()) return true;
  return !a->name().empty() && a->name() == b->name();
}

}  // namespace

ReshuffleWitness reshuffle(const EnrichedStructure& a, const IdmQuantaloid& idm) {
  if (!same_base(a.base, idm.source))
    throw input_error("reshuffle: structure does not live over the completed base's source");
  if (!a.flags.totally_regular)
    throw input_error("reshuffle: structure is not totally regular");
  const int n = a.obs.size();

  TypedSet obs;
  obs.names = a.obs.names;
  obs.types.resize(n);
  for (int x = 0; x < n; ++x) {
    ArrowRef e{a.obs.types[x], a.obs.types[x], a.hom.at(x, x)};
    Obj t = idm.object_of(e);
    if (t < 0) throw input_error("reshuffle: endo-hom is not idempotent");
    obs.types[x] = t;
  }
  std::vector<Elem> entries(static_cast<size_t>(n) * n, -1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Elem moved = idm.completed_elem(obs.types[c], obs.types[r], a.hom.at(r, c));
      if (moved < 0)
        throw input_error("reshuffle: a hom entry is not absorbed by the endo-homs");
      entries[static_cast<size_t>(r) * n + c] = moved;
    }
  EnrichedStructure target = make_structure(idm.completed, std::move(obs), std::move(entries));
  return ReshuffleWitness{a, std::move(target)};
}

EnrichedStructure unreshuffle(const EnrichedStructure& c, const IdmQuantaloid& idm) {
  if (!same_base(c.base, idm.completed))
    throw input_error("unreshuffle: structure does not live over a completed base");
  if (!c.flags.normal) throw input_error("unreshuffle: structure is not normal");
  const int n = c.obs.size();
  TypedSet obs;
  obs.names = c.obs.names;
  obs.types.resize(n);
  for (int x = 0; x < n; ++x) obs.types[x] = idm.object_idem[c.obs.types[x]].src;
  std::vector<Elem> entries(static_cast<size_t>(n) * n, -1);
  for (int r = 0; r < n; ++r)
    for (int c2 = 0; c2 < n; ++c2)
      entries[static_cast<size_t>(r) * n + c2] =
          idm.source_elem(c.obs.types[c2], c.obs.types[r], c.hom.at(r, c2));
  return make_structure(idm.source, std::move(obs), std::move(entries));
}

QMatrix reshuffle_matrix(const QMatrix& mat, const EnrichedStructure& dom,
                         const EnrichedStructure& cod, const ReshuffleWitness& dom_w,
                         const ReshuffleWitness& cod_w, const IdmQuantaloid& idm) {
  if (!same_typing(mat.rows, cod.obs) || !same_typing(mat.cols, dom.obs))
    throw input_error("reshuffle_matrix: matrix shape does not match the structures");
  QMatrix out;
  out.rows = cod_w.target.obs;
  out.cols = dom_w.target.obs;
  out.entries.assign(mat.entries.size(), -1);
  for (int r = 0; r < out.rows.size(); ++r)
    for (int c = 0; c < out.cols.size(); ++c) {
      Elem moved =
          idm.completed_elem(out.cols.types[c], out.rows.types[r], mat.at(r, c));
      if (moved < 0)
        throw input_error("reshuffle_matrix: an entry is not absorbed by the endo-homs");
      out.at(r, c) = moved;
    }
  return out;
}

NormalizeOutcome normalize_category(const EnrichedStructure& a,
                                    const std::optional<SplittingChoice>& choice) {
  NormalizeOutcome outcome;
  if (!a.flags.category) throw input_error("normalize: structure is not a category");
  const Quantaloid& q = *a.base;
  const int n = a.obs.size();

  SplittingChoice picked;
  for (int x = 0; x < n; ++x) {
    ArrowRef monad{a.obs.types[x], a.obs.types[x], a.hom.at(x, x)};
    if (choice) {
      if (static_cast<size_t>(x) >= choice->entries.size())
        throw input_error("normalize: splitting choice is missing objects");
      const SplitEntry& given = choice->entries[x];
      if (given.object != x)
        throw input_error("normalize: splitting choice entries out of order");
      if (!(given.monad == monad))
        throw input_error("normalize: splitting choice does not match an endo-hom");
      if (q.compose(monad.src, given.via, monad.src, given.backward.elem,
                    given.forward.elem) != monad.elem ||
          q.compose(given.via, monad.src, given.via, given.forward.elem,
                    given.backward.elem) != q.id(given.via))
        throw input_error("normalize: supplied splitting does not split the monad");
      picked.entries.push_back(given);
    } else {
      auto split = split_monad(q, monad);
      if (!split) {
        outcome.error = "monad " +
                        q.elem_names(monad.src, monad.src)[monad.elem] +
                        " at object " + a.obs.names[x] + " does not split";
        outcome.offending_object = x;
        return outcome;
      }
      picked.entries.push_back(
          SplitEntry{x, monad, split->via, split->forward, split->backward});
    }
  }

  TypedSet obs;
  obs.names = a.obs.names;
  obs.types.resize(n);
  for (int x = 0; x < n; ++x) obs.types[x] = picked.entries[x].via;

  // normalized(r,c) = f_r ∘ a(r,c) ∘ u_c ; the connecting matrices keep one
  // side of the splitting each.
  std::vector<Elem> hom(static_cast<size_t>(n) * n), to(hom.size()), from(hom.size());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Obj tr = a.obs.types[r], tc = a.obs.types[c];
      Obj vr = picked.entries[r].via, vc = picked.entries[c].via;
      Elem au = q.compose(vc, tc, tr, a.hom.at(r, c), picked.entries[c].backward.elem);
      hom[static_cast<size_t>(r) * n + c] =
          q.compose(vc, tr, vr, picked.entries[r].forward.elem, au);
      to[static_cast<size_t>(r) * n + c] =
          q.compose(tc, tr, vr, picked.entries[r].forward.elem, a.hom.at(r, c));
      from[static_cast<size_t>(r) * n + c] = au;
    }

  NormalizeResult result;
  result.normalized = make_structure(a.base, std::move(obs), std::move(hom));
  result.to_normalized = make_matrix(q, result.normalized.obs, a.obs, std::move(to));
  result.from_normalized = make_matrix(q, a.obs, result.normalized.obs, std::move(from));
  result.choice = std::move(picked);
  result.inverse_pair_verified =
      matrices_equal(compose(q, result.from_normalized, result.to_normalized), a.hom) &&
      matrices_equal(compose(q, result.to_normalized, result.from_normalized),
                     result.normalized.hom);
  outcome.result = std::move(result);
  return outcome;
}

}  // namespace qorder
