#include "qorder/structures.hpp"

namespace qorder {

StructureFlags classify(const Quantaloid& q, const QMatrix& hom) {
  if (!same_typing(hom.rows, hom.cols)) throw input_error("classify: hom matrix not square");
  StructureFlags flags;
  const int n = hom.rows.size();
  QMatrix sq = compose(q, hom, hom);
  flags.semicategory = leq_matrix(q, sq, hom);
  flags.regular = flags.semicategory && matrices_equal(sq, hom);

  bool units = true, normal = true;
  for (int a = 0; a < n; ++a) {
    Obj t = hom.rows.types[a];
    units = units && q.hom(t, t).leq(q.id(t), hom.at(a, a));
    normal = normal && hom.at(a, a) == q.id(t);
  }
  flags.category = flags.semicategory && units;
  flags.normal = flags.category && normal;

  bool absorbing = true;
  for (int a = 0; a < n && absorbing; ++a) {
    Obj ta = hom.rows.types[a];
    for (int b = 0; b < n && absorbing; ++b) {
      Obj tb = hom.rows.types[b];
      // hom(b,a) ∘ hom(a,a) = hom(b,a) and hom(a,a) ∘ hom(a,b) = hom(a,b)
      if (q.compose(ta, ta, tb, hom.at(b, a), hom.at(a, a)) != hom.at(b, a))
        absorbing = false;
      if (q.compose(tb, ta, ta, hom.at(a, a), hom.at(a, b)) != hom.at(a, b))
        absorbing = false;
    }
  }
  flags.totally_regular = flags.semicategory && absorbing;
  return flags;
}

EnrichedStructure make_structure(QuantaloidPtr base, TypedSet obs,
                                 std::vector<Elem> hom_entries) {
  if (!base) throw input_error("structure: missing base");
  QMatrix hom = make_matrix(*base, obs, obs, std::move(hom_entries));
  StructureFlags flags = classify(*base, hom);
  return EnrichedStructure{std::move(base), std::move(obs), std::move(hom), flags};
}

bool structures_equal(const EnrichedStructure& a, const EnrichedStructure& b) {
  return a.obs.types == b.obs.types && a.hom.entries == b.hom.entries;
}

EnrichedStructure star_identity(QuantaloidPtr base, Obj type, std::string name) {
  Elem unit = base->id(type);
  return make_structure(std::move(base), singleton_typed(type, std::move(name)), {unit});
}

EnrichedStructure star_idempotent(QuantaloidPtr base, const ArrowRef& idem,
                                  std::string name) {
  if (idem.src != idem.dst) throw input_error("star_idempotent: not an endo-arrow");
  if (base->compose(idem.src, idem.src, idem.src, idem.elem, idem.elem) != idem.elem)
    throw input_error("star_idempotent: arrow is not idempotent");
  return make_structure(std::move(base), singleton_typed(idem.src, std::move(name)),
                        {idem.elem});
}

std::vector<int> stable_objects(const EnrichedStructure& s) {
  if (!s.flags.regular) throw input_error("stable_objects: structure is not regular");
  const Quantaloid& q = *s.base;
  std::vector<int> out;
  const int n = s.obs.size();
  for (int a = 0; a < n; ++a) {
    Obj ta = s.obs.types[a];
    bool stable = true;
    for (int b = 0; b < n && stable; ++b) {
      Obj tb = s.obs.types[b];
      if (q.compose(ta, ta, tb, s.hom.at(b, a), s.hom.at(a, a)) != s.hom.at(b, a))
        stable = false;
      if (q.compose(tb, ta, ta, s.hom.at(a, a), s.hom.at(a, b)) != s.hom.at(a, b))
        stable = false;
    }
    if (stable) out.push_back(a);
  }
  return out;
}

std::vector<int> stable_objects_by_pointing(const EnrichedStructure& s) {
  if (!s.flags.regular) throw input_error("stable_objects: structure is not regular");
  const Quantaloid& q = *s.base;
  std::vector<int> out;
  const int n = s.obs.size();
  for (int a = 0; a < n; ++a) {
    Obj ta = s.obs.types[a];
    bool stable = false;
    for (const ArrowRef& e : idempotents(q, ta)) {
      if (!q.hom(ta, ta).leq(e.elem, s.hom.at(a, a))) continue;
      bool pointing = true;
      for (int b = 0; b < n && pointing; ++b) {
        Obj tb = s.obs.types[b];
        if (q.compose(ta, ta, tb, s.hom.at(b, a), e.elem) != s.hom.at(b, a))
          pointing = false;
        if (q.compose(tb, ta, ta, e.elem, s.hom.at(a, b)) != s.hom.at(a, b))
          pointing = false;
      }
      if (pointing) {
        stable = true;
        break;
      }
    }
    if (stable) out.push_back(a);
  }
  return out;
}

SemiDistFlags check_semidistributor(const Quantaloid& q, const EnrichedStructure& dom,
                                    const EnrichedStructure& cod, const QMatrix& mat) {
  if (!same_typing(mat.rows, cod.obs) || !same_typing(mat.cols, dom.obs))
    throw input_error("semidistributor: matrix shape does not match the structures");
  SemiDistFlags flags;
  QMatrix left = compose(q, cod.hom, mat);   // cod action
  QMatrix right = compose(q, mat, dom.hom);  // dom action
  flags.semidistributor = leq_matrix(q, left, mat) && leq_matrix(q, right, mat);
  flags.regular = matrices_equal(left, mat) && matrices_equal(right, mat);
  return flags;
}

SemiDistFlags check_semidistributor_absorption(const Quantaloid& q,
                                               const EnrichedStructure& dom,
                                               const EnrichedStructure& cod,
                                               const QMatrix& mat) {
  if (!dom.flags.totally_regular || !cod.flags.totally_regular)
    throw input_error("semidistributor: absorption shortcut needs totally regular ends");
  SemiDistFlags flags = check_semidistributor(q, dom, cod, mat);
  bool absorbs = flags.semidistributor;
  for (int b = 0; b < cod.obs.size() && absorbs; ++b)
    for (int a = 0; a < dom.obs.size() && absorbs; ++a) {
      Obj ta = dom.obs.types[a], tb = cod.obs.types[b];
      if (q.compose(ta, tb, tb, cod.hom.at(b, b), mat.at(b, a)) != mat.at(b, a))
        absorbs = false;
      if (q.compose(ta, ta, tb, mat.at(b, a), dom.hom.at(a, a)) != mat.at(b, a))
        absorbs = false;
    }
  flags.regular = absorbs;
  return flags;
}

SemiDistributor make_semidistributor(EnrichedStructure dom, EnrichedStructure cod,
                                     QMatrix mat) {
  SemiDistFlags flags = check_semidistributor(*dom.base, dom, cod, mat);
  return SemiDistributor{std::move(dom), std::move(cod), std::move(mat), flags};
}

SemiDistributor make_semidistributor(EnrichedStructure dom, EnrichedStructure cod,
                                     std::vector<Elem> entries) {
  QMatrix mat = make_matrix(*dom.base, cod.obs, dom.obs, std::move(entries));
  return make_semidistributor(std::move(dom), std::move(cod), std::move(mat));
}

SemiDistributor identity_semidistributor(const EnrichedStructure& s) {
  return make_semidistributor(s, s, s.hom);
}

MapFlags check_object_map(const EnrichedStructure& dom, const EnrichedStructure& cod,
                          const std::vector<int>& images) {
  if (images.size() != static_cast<size_t>(dom.obs.size()))
    throw input_error("object map: image list has the wrong length");
  for (int a = 0; a < dom.obs.size(); ++a) {
    int fa = images[a];
    if (fa < 0 || fa >= cod.obs.size())
      throw input_error("object map: image outside the codomain");
    if (cod.obs.types[fa] != dom.obs.types[a])
      throw input_error("object map: not type-preserving");
  }
  const Quantaloid& q = *dom.base;
  MapFlags flags;
  bool semifunctor = true;
  for (int a1 = 0; a1 < dom.obs.size() && semifunctor; ++a1)
    for (int a2 = 0; a2 < dom.obs.size() && semifunctor; ++a2) {
      Obj t = dom.obs.types[a2];
      Obj t1 = dom.obs.types[a1];
      if (!q.hom(t, t1).leq(dom.hom.at(a1, a2), cod.hom.at(images[a1], images[a2])))
        semifunctor = false;
    }
  flags.semifunctor = semifunctor;
  flags.functor = semifunctor && dom.flags.category && cod.flags.category;
  if (semifunctor) {
    ObjectMap f{dom, cod, images, {}};
    auto [left, right] = induced_matrices(f);
    SemiDistFlags lf = check_semidistributor(q, dom, cod, left);
    SemiDistFlags rf = check_semidistributor(q, cod, dom, right);
    flags.regular_semifunctor = lf.regular && rf.regular;
  }
  return flags;
}

MapFlags check_object_map_absorption(const EnrichedStructure& dom,
                                     const EnrichedStructure& cod,
                                     const std::vector<int>& images) {
  MapFlags flags = check_object_map(dom, cod, images);
  if (!dom.flags.totally_regular || !cod.flags.totally_regular)
    throw input_error("object map: absorption shortcut needs totally regular ends");
  const Quantaloid& q = *dom.base;
  bool absorbs = flags.semifunctor;
  for (int a = 0; a < dom.obs.size() && absorbs; ++a) {
    Obj ta = dom.obs.types[a];
    for (int b = 0; b < cod.obs.size() && absorbs; ++b) {
      Obj tb = cod.obs.types[b];
      if (q.compose(ta, ta, tb, cod.hom.at(b, images[a]), dom.hom.at(a, a)) !=
          cod.hom.at(b, images[a]))
        absorbs = false;
      if (q.compose(tb, ta, ta, dom.hom.at(a, a), cod.hom.at(images[a], b)) !=
          cod.hom.at(images[a], b))
        absorbs = false;
    }
  }
  flags.regular_semifunctor = absorbs;
  return flags;
}

ObjectMap make_object_map(EnrichedStructure dom, EnrichedStructure cod,
                          std::vector<int> images) {
  MapFlags flags = check_object_map(dom, cod, images);
  return ObjectMap{std::move(dom), std::move(cod), std::move(images), flags};
}

ObjectMap identity_map(const EnrichedStructure& s) {
  std::vector<int> images(s.obs.size());
  for (int a = 0; a < s.obs.size(); ++a) images[a] = a;
  return make_object_map(s, s, std::move(images));
}

ObjectMap compose_maps(const ObjectMap& first, const ObjectMap& then) {
  if (!same_typing(first.cod.obs, then.dom.obs) ||
      first.cod.hom.entries != then.dom.hom.entries)
    throw input_error("compose_maps: middle structures do not match");
  std::vector<int> images(first.images.size());
  for (size_t a = 0; a < first.images.size(); ++a) images[a] = then.images[first.images[a]];
  return make_object_map(first.dom, then.cod, std::move(images));
}

std::pair<QMatrix, QMatrix> induced_matrices(const ObjectMap& f) {
  QMatrix left;  // cod(-,F-) : dom -|-> cod
  left.rows = f.cod.obs;
  left.cols = f.dom.obs;
  left.entries.assign(static_cast<size_t>(left.rows.size()) * left.cols.size(), 0);
  for (int b = 0; b < f.cod.obs.size(); ++b)
    for (int a = 0; a < f.dom.obs.size(); ++a) left.at(b, a) = f.cod.hom.at(b, f.images[a]);
  QMatrix right;  // cod(F-,-) : cod -|-> dom
  right.rows = f.dom.obs;
  right.cols = f.cod.obs;
  right.entries.assign(static_cast<size_t>(right.rows.size()) * right.cols.size(), 0);
  for (int a = 0; a < f.dom.obs.size(); ++a)
    for (int b = 0; b < f.cod.obs.size(); ++b) right.at(a, b) = f.cod.hom.at(f.images[a], b);
  return {std::move(left), std::move(right)};
}

std::pair<SemiDistributor, SemiDistributor> induced_pair(const ObjectMap& f) {
  if (!f.flags.semifunctor) throw input_error("induced_pair: map is not a semifunctor");
  auto [left, right] = induced_matrices(f);
  return {make_semidistributor(f.dom, f.cod, std::move(left)),
          make_semidistributor(f.cod, f.dom, std::move(right))};
}

bool map_leq(const ObjectMap& f, const ObjectMap& g) {
  if (!same_typing(f.dom.obs, g.dom.obs) || !same_typing(f.cod.obs, g.cod.obs))
    throw input_error("map_leq: maps are not parallel");
  auto [lf, _rf] = induced_matrices(f);
  auto [lg, _rg] = induced_matrices(g);
  return leq_matrix(*f.dom.base, lf, lg);
}

bool map_equivalent(const ObjectMap& f, const ObjectMap& g) {
  return map_leq(f, g) && map_leq(g, f);
}

Subgraph full_subgraph(const EnrichedStructure& s, const std::vector<int>& objects) {
  for (int a : objects)
    if (a < 0 || a >= s.obs.size()) throw input_error("full_subgraph: object out of range");
  TypedSet obs;
  for (int a : objects) {
    obs.names.push_back(s.obs.names[a]);
    obs.types.push_back(s.obs.types[a]);
  }
  std::vector<Elem> entries;
  entries.reserve(objects.size() * objects.size());
  for (int r : objects)
    for (int c : objects) entries.push_back(s.hom.at(r, c));
  EnrichedStructure sub = make_structure(s.base, std::move(obs), std::move(entries));
  ObjectMap embedding = make_object_map(sub, s, objects);
  return Subgraph{std::move(sub), std::move(embedding)};
}

}  // namespace qorder
