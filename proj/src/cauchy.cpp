#include "qorder/cauchy.hpp"

#include <algorithm>

namespace qorder {

QMatrix right_adjoint_candidate(const Quantaloid& q, const EnrichedStructure& dom,
                                const EnrichedStructure& cod, const QMatrix& phi,
                                bool category_calculus) {
  if (!dom.flags.regular || !cod.flags.regular)
    throw input_error("right_adjoint_candidate: ends are not regular");
  if (category_calculus && (!dom.flags.category || !cod.flags.category))
    throw input_error("right_adjoint_candidate: ends are not categories");
  QMatrix residual = mat_extension(q, phi, cod.hom);
  if (category_calculus) return residual;
  return compose(q, compose(q, dom.hom, residual), cod.hom);
}

std::optional<AdjointPair> is_left_adjoint(const SemiDistributor& phi) {
  if (!phi.flags.regular) return std::nullopt;
  if (!phi.dom.flags.regular || !phi.cod.flags.regular) return std::nullopt;
  const Quantaloid& q = *phi.dom.base;
  QMatrix cand = right_adjoint_candidate(q, phi.dom, phi.cod, phi.mat);
  SemiDistributor right = make_semidistributor(phi.cod, phi.dom, cand);
  if (!right.flags.regular) return std::nullopt;
  if (!leq_matrix(q, phi.dom.hom, compose(q, right.mat, phi.mat))) return std::nullopt;
  if (!leq_matrix(q, compose(q, phi.mat, right.mat), phi.cod.hom)) return std::nullopt;
  return AdjointPair{phi, std::move(right)};
}

std::optional<ObjectMap> converges(const AdjointPair& pair) {
  const SemiDistributor& phi = pair.left;
  const Quantaloid& q = *phi.dom.base;
  {
    QMatrix unit = compose(q, pair.right.mat, phi.mat);
    QMatrix counit = compose(q, phi.mat, pair.right.mat);
    if (!leq_matrix(q, phi.dom.hom, unit) || !leq_matrix(q, counit, phi.cod.hom))
      throw input_error("converges: the pair is not an adjunction");
  }
  const EnrichedStructure& a = phi.dom;
  const EnrichedStructure& b = phi.cod;
  std::vector<int> images(a.obs.size(), -1);
  for (int x = 0; x < a.obs.size(); ++x) {
    for (int cand = 0; cand < b.obs.size(); ++cand) {
      if (b.obs.types[cand] != a.obs.types[x]) continue;
      bool column = true;
      for (int y = 0; y < b.obs.size() && column; ++y)
        if (b.hom.at(y, cand) != phi.mat.at(y, x)) column = false;
      for (int y = 0; y < b.obs.size() && column; ++y)
        if (b.hom.at(cand, y) != pair.right.mat.at(x, y)) column = false;
      if (column) {
        images[x] = cand;
        break;
      }
    }
    if (images[x] < 0) return std::nullopt;
  }
  return make_object_map(a, b, std::move(images));
}

namespace {

// Odometer over probe matrices phi : *_e -|-> B with entries
// phi(y) in hom(dom(e), type y), ascending and row-major in y.
template <typename Fn>
void for_each_probe_matrix(const Quantaloid& q, Obj src, const EnrichedStructure& b,
                           Fn&& fn) {
  const int n = b.obs.size();
  std::vector<Elem> entries(n, 0);
  std::vector<int> sizes(n);
  for (int y = 0; y < n; ++y) sizes[y] = q.hom(src, b.obs.types[y]).size();
  while (true) {
    fn(entries);
    int pos = n - 1;
    while (pos >= 0 && entries[pos] + 1 >= sizes[pos]) {
      entries[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++entries[pos];
  }
}

std::optional<int> probe_convergence_target(const EnrichedStructure& b, const ArrowRef& e,
                                            const QMatrix& probe, const QMatrix& adjoint) {
  const Quantaloid& q = *b.base;
  for (int cand = 0; cand < b.obs.size(); ++cand) {
    if (b.obs.types[cand] != e.src) continue;
    if (!q.hom(e.src, e.src).leq(e.elem, b.hom.at(cand, cand))) continue;
    bool match = true;
    for (int y = 0; y < b.obs.size() && match; ++y) {
      if (b.hom.at(y, cand) != probe.at(y, 0)) match = false;
      if (b.hom.at(cand, y) != adjoint.at(0, y)) match = false;
    }
    if (match) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::vector<ProbeEntry> sweep_probes(const EnrichedStructure& b, ProbeKind kind) {
  const Quantaloid& q = *b.base;
  std::vector<ProbeEntry> out;
  for (Obj src = 0; src < q.objects(); ++src) {
    std::vector<ArrowRef> domains;
    if (kind == ProbeKind::identity_homs)
      domains.push_back(ArrowRef{src, src, q.id(src)});
    else
      domains = idempotents(q, src);
    for (const ArrowRef& e : domains) {
      EnrichedStructure probe_dom = star_idempotent(b.base, e);
      for_each_probe_matrix(q, src, b, [&](const std::vector<Elem>& entries) {
        QMatrix mat;
        mat.rows = b.obs;
        mat.cols = probe_dom.obs;
        mat.entries = entries;
        SemiDistFlags flags = check_semidistributor(q, probe_dom, b, mat);
        if (!flags.regular) return;
        SemiDistributor phi{probe_dom, b, mat, flags};
        auto adj = is_left_adjoint(phi);
        if (!adj) return;
        ProbeEntry entry;
        entry.idem = e;
        entry.probe = std::move(adj->left.mat);
        entry.adjoint = std::move(adj->right.mat);
        entry.converges_to = probe_convergence_target(b, e, entry.probe, entry.adjoint);
        out.push_back(std::move(entry));
      });
    }
  }
  return out;
}

namespace {

CompletenessReport completeness_by_probes(const EnrichedStructure& b, ProbeKind kind) {
  CompletenessReport rep;
  for (ProbeEntry& entry : sweep_probes(b, kind))
    if (!entry.converges_to) {
      rep.complete = false;
      rep.failures.push_back(std::move(entry));
    }
  return rep;
}

}  // namespace

CompletenessReport is_cauchy_complete_trs(const EnrichedStructure& b) {
  if (!b.flags.totally_regular)
    throw input_error("is_cauchy_complete_trs: structure is not totally regular");
  return completeness_by_probes(b, ProbeKind::idempotent_homs);
}

CompletenessReport is_cauchy_complete_cat(const EnrichedStructure& b) {
  if (!b.flags.category) throw input_error("is_cauchy_complete_cat: not a category");
  return completeness_by_probes(b, ProbeKind::identity_homs);
}

CompletionResult complete_by_probes(const EnrichedStructure& b, ProbeKind kind) {
  if (!b.flags.regular) throw input_error("completion: structure is not regular");
  const Quantaloid& q = *b.base;
  std::vector<ProbeEntry> table = sweep_probes(b, kind);
  const int n = static_cast<int>(table.size());

  TypedSet obs;
  obs.names.resize(n);
  obs.types.resize(n);
  for (int i = 0; i < n; ++i) {
    obs.names[i] = "phi" + std::to_string(i);
    obs.types[i] = table[i].idem.src;
  }
  std::vector<Elem> hom(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QMatrix h = compose(q, table[i].adjoint, table[j].probe);
      hom[static_cast<size_t>(i) * n + j] = h.at(0, 0);
    }
  EnrichedStructure completed = make_structure(b.base, std::move(obs), std::move(hom));

  std::vector<int> images(b.obs.size(), -1);
  bool total = true;
  for (int x = 0; x < b.obs.size(); ++x) {
    ArrowRef e{b.obs.types[x], b.obs.types[x],
               kind == ProbeKind::identity_homs ? q.id(b.obs.types[x]) : b.hom.at(x, x)};
    for (int i = 0; i < n; ++i) {
      if (!(table[i].idem == e)) continue;
      bool column = true;
      for (int y = 0; y < b.obs.size() && column; ++y)
        if (table[i].probe.at(y, 0) != b.hom.at(y, x)) column = false;
      if (column) {
        images[x] = i;
        break;
      }
    }
    total = total && images[x] >= 0;
  }

  CompletionResult out;
  out.embed_total = total;
  if (total)
    out.embed = make_object_map(b, completed, std::move(images));
  else
    out.embed = ObjectMap{b, completed, std::move(images), {}};
  out.completed = std::move(completed);
  out.table = std::move(table);
  return out;
}

CompletionResult cauchy_complete_trs(const EnrichedStructure& b) {
  if (!b.flags.totally_regular)
    throw input_error("cauchy_complete_trs: structure is not totally regular");
  return complete_by_probes(b, ProbeKind::idempotent_homs);
}

CompletionResult cauchy_complete_cat(const EnrichedStructure& b) {
  if (!b.flags.category) throw input_error("cauchy_complete_cat: not a category");
  return complete_by_probes(b, ProbeKind::identity_homs);
}

CompletionResult skeletalize(const CompletionResult& c) {
  const EnrichedStructure& s = c.completed;
  const int n = s.obs.size();
  std::vector<int> rep(n, -1);
  std::vector<int> kept;
  for (int i = 0; i < n; ++i) {
    for (int j : kept) {
      if (s.obs.types[i] != s.obs.types[j]) continue;
      bool same = true;
      for (int k = 0; k < n && same; ++k)
        same = s.hom.at(i, k) == s.hom.at(j, k) && s.hom.at(k, i) == s.hom.at(k, j);
      if (same) {
        rep[i] = j;
        break;
      }
    }
    if (rep[i] < 0) {
      rep[i] = i;
      kept.push_back(i);
    }
  }
  std::vector<int> new_index(n, -1);
  for (size_t k = 0; k < kept.size(); ++k) new_index[kept[k]] = static_cast<int>(k);

  Subgraph sub = full_subgraph(s, kept);
  CompletionResult out;
  out.completed = sub.sub;
  out.embed_total = c.embed_total;
  std::vector<int> images(c.embed.images.size(), -1);
  for (size_t x = 0; x < images.size(); ++x)
    if (c.embed.images[x] >= 0) images[x] = new_index[rep[c.embed.images[x]]];
  if (out.embed_total)
    out.embed = make_object_map(c.embed.dom, out.completed, std::move(images));
  else
    out.embed = ObjectMap{c.embed.dom, out.completed, std::move(images), {}};
  for (int i : kept) out.table.push_back(c.table[i]);
  return out;
}

YonedaReport yoneda_check(const EnrichedStructure& b, const CompletionResult& c) {
  YonedaReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  if (!c.embed_total) {
    fail("embedding is not defined on every object");
    return rep;
  }
  const Quantaloid& q = *b.base;
  const EnrichedStructure& cc = c.completed;
  const int n = cc.obs.size();

  for (int x = 0; x < b.obs.size(); ++x) {
    const int kx = c.embed.images[x];
    for (int i = 0; i < n; ++i) {
      if (cc.hom.at(kx, i) != c.table[i].probe.at(x, 0))
        fail("hom(k " + b.obs.names[x] + ", phi" + std::to_string(i) +
             ") differs from the probe value");
      if (cc.hom.at(i, kx) != c.table[i].adjoint.at(0, x))
        fail("hom(phi" + std::to_string(i) + ", k " + b.obs.names[x] +
             ") differs from the adjoint value");
    }
    for (int y = 0; y < b.obs.size(); ++y)
      if (cc.hom.at(c.embed.images[x], c.embed.images[y]) != b.hom.at(x, y))
        fail("embedding is not fully faithful at (" + b.obs.names[x] + ", " +
             b.obs.names[y] + ")");
  }

  // The two matrices induced by the embedding compose to the identities.
  QMatrix into;  // b -|-> completed
  into.rows = cc.obs;
  into.cols = b.obs;
  into.entries.assign(static_cast<size_t>(n) * b.obs.size(), 0);
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < b.obs.size(); ++x) into.at(i, x) = cc.hom.at(i, c.embed.images[x]);
  QMatrix from;  // completed -|-> b
  from.rows = b.obs;
  from.cols = cc.obs;
  from.entries.assign(static_cast<size_t>(b.obs.size()) * n, 0);
  for (int x = 0; x < b.obs.size(); ++x)
    for (int i = 0; i < n; ++i) from.at(x, i) = cc.hom.at(c.embed.images[x], i);
  if (!matrices_equal(compose(q, from, into), b.hom))
    fail("inverse pair: composite on the source side is not the identity");
  if (!matrices_equal(compose(q, into, from), cc.hom))
    fail("inverse pair: composite on the completion side is not the identity");
  return rep;
}

ObjectMap factor_through_completion(const ObjectMap& f, const CompletionResult& a_completed,
                                    bool verify_complete) {
  if (!f.flags.regular_semifunctor)
    throw input_error("factor: map is not a regular semifunctor");
  if (!structures_equal(f.dom, a_completed.embed.dom))
    throw input_error("factor: completion does not belong to the map's source");
  const EnrichedStructure& b = f.cod;
  if (verify_complete && !is_cauchy_complete_trs(b).complete)
    throw input_error("factor: target is not Cauchy complete");
  const Quantaloid& q = *b.base;

  auto [left, right] = induced_matrices(f);
  std::vector<int> images(a_completed.table.size(), -1);
  for (size_t i = 0; i < a_completed.table.size(); ++i) {
    const ProbeEntry& entry = a_completed.table[i];
    EnrichedStructure probe_dom = star_idempotent(b.base, entry.idem);
    QMatrix comp_left = compose(q, left, entry.probe);
    QMatrix comp_right = compose(q, entry.adjoint, right);
    SemiDistributor phi = make_semidistributor(probe_dom, b, comp_left);
    SemiDistributor phi_star = make_semidistributor(b, probe_dom, comp_right);
    auto target = converges(AdjointPair{std::move(phi), std::move(phi_star)});
    if (!target)
      throw input_error("factor: a transported probe fails to converge");
    images[i] = target->images[0];
  }
  ObjectMap g = make_object_map(a_completed.completed, b, std::move(images));
  ObjectMap along = compose_maps(a_completed.embed, g);
  if (!map_equivalent(along, f))
    throw input_error("factor: factorization does not restrict to the original map");
  return g;
}

std::vector<SemiDistributor> enumerate_left_adjoints(const EnrichedStructure& a,
                                                     const EnrichedStructure& b) {
  if (a.base.get() != b.base.get() &&
      (a.base->name().empty() || a.base->name() != b.base->name()))
    throw input_error("enumerate_left_adjoints: different bases");
  const Quantaloid& q = *a.base;
  std::vector<ProbeEntry> probes = sweep_probes(b, ProbeKind::idempotent_homs);

  // Per-column candidate probes: column a of a left adjoint is itself a left
  // adjoint probe on the endo-hom idempotent of a.
  std::vector<std::vector<const ProbeEntry*>> column_choices(a.obs.size());
  for (int x = 0; x < a.obs.size(); ++x) {
    ArrowRef e{a.obs.types[x], a.obs.types[x], a.hom.at(x, x)};
    for (const ProbeEntry& p : probes)
      if (p.idem == e) column_choices[x].push_back(&p);
    if (column_choices[x].empty()) return {};
  }

  std::vector<SemiDistributor> out;
  std::vector<size_t> pick(a.obs.size(), 0);
  while (true) {
    QMatrix mat;
    mat.rows = b.obs;
    mat.cols = a.obs;
    mat.entries.assign(static_cast<size_t>(b.obs.size()) * a.obs.size(), 0);
    for (int x = 0; x < a.obs.size(); ++x)
      for (int y = 0; y < b.obs.size(); ++y)
        mat.at(y, x) = column_choices[x][pick[x]]->probe.at(y, 0);
    SemiDistFlags flags = check_semidistributor(q, a, b, mat);
    if (flags.regular) {
      SemiDistributor phi{a, b, mat, flags};
      if (is_left_adjoint(phi)) {
        bool seen = false;
        for (const SemiDistributor& prev : out)
          if (matrices_equal(prev.mat, mat)) seen = true;
        if (!seen) out.push_back(std::move(phi));
      }
    }
    int pos = static_cast<int>(pick.size()) - 1;
    while (pos >= 0 && pick[pos] + 1 >= column_choices[pos].size()) {
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++pick[pos];
  }
  return out;
}

}  // namespace qorder
