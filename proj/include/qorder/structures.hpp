#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qorder/qmatrix.hpp"

namespace qorder {

struct StructureFlags {
  bool semicategory = false;     // hom⊗hom <= hom
  bool regular = false;          // hom⊗hom = hom
  bool totally_regular = false;  // semicategory + endo-homs absorb on both sides
  bool category = false;         // semicategory + identities below the diagonal
  bool normal = false;           // category with endo-homs equal to identities
};

/// A typed object set with a square hom matrix over a base; the class flags
/// are computed once at construction since everything downstream branches
/// on them.
struct EnrichedStructure {
  QuantaloidPtr base;
  TypedSet obs;
  QMatrix hom;  // hom.at(r,c) is the hom-arrow from obs[c] to obs[r]
  StructureFlags flags;
};

StructureFlags classify(const Quantaloid& q, const QMatrix& hom);
EnrichedStructure make_structure(QuantaloidPtr base, TypedSet obs,
                                 std::vector<Elem> hom_entries);
bool structures_equal(const EnrichedStructure& a, const EnrichedStructure& b);

/// One-object structure with an identity hom.
EnrichedStructure star_identity(QuantaloidPtr base, Obj type, std::string name = "*");
/// One-object structure with an idempotent hom.
EnrichedStructure star_idempotent(QuantaloidPtr base, const ArrowRef& idem,
                                  std::string name = "*");

/// Objects whose endo-hom absorbs every hom into and out of them.
std::vector<int> stable_objects(const EnrichedStructure& s);
/// Independent route: an object is stable when some idempotent below its
/// endo-hom acts as a two-sided local identity (a one-object structure can
/// point at it). Used to cross-check stable_objects.
std::vector<int> stable_objects_by_pointing(const EnrichedStructure& s);

struct SemiDistFlags {
  bool semidistributor = false;  // action inequalities
  bool regular = false;          // action equalities
};

struct SemiDistributor {
  EnrichedStructure dom, cod;
  QMatrix mat;  // mat.at(b,a) : type(dom a) -> type(cod b)
  SemiDistFlags flags;
};

SemiDistFlags check_semidistributor(const Quantaloid& q, const EnrichedStructure& dom,
                                    const EnrichedStructure& cod, const QMatrix& mat);
/// Regularity via the endo-absorption shortcut valid between totally regular
/// structures; kept separate so tests can compare it with the general route.
SemiDistFlags check_semidistributor_absorption(const Quantaloid& q,
                                               const EnrichedStructure& dom,
                                               const EnrichedStructure& cod,
                                               const QMatrix& mat);
SemiDistributor make_semidistributor(EnrichedStructure dom, EnrichedStructure cod,
                                     std::vector<Elem> entries);
SemiDistributor make_semidistributor(EnrichedStructure dom, EnrichedStructure cod,
                                     QMatrix mat);
SemiDistributor identity_semidistributor(const EnrichedStructure& s);

struct MapFlags {
  bool semifunctor = false;
  bool functor = false;             // semifunctor between categories
  bool regular_semifunctor = false; // both induced matrices are regular
};

/// A type-preserving object mapping.
struct ObjectMap {
  EnrichedStructure dom, cod;
  std::vector<int> images;
  MapFlags flags;
};

MapFlags check_object_map(const EnrichedStructure& dom, const EnrichedStructure& cod,
                          const std::vector<int>& images);
MapFlags check_object_map_absorption(const EnrichedStructure& dom,
                                     const EnrichedStructure& cod,
                                     const std::vector<int>& images);
ObjectMap make_object_map(EnrichedStructure dom, EnrichedStructure cod,
                          std::vector<int> images);
ObjectMap identity_map(const EnrichedStructure& s);
ObjectMap compose_maps(const ObjectMap& first, const ObjectMap& then);

/// The matrices cod(-,F-) : dom -|-> cod and cod(F-,-) : cod -|-> dom.
std::pair<QMatrix, QMatrix> induced_matrices(const ObjectMap& f);
std::pair<SemiDistributor, SemiDistributor> induced_pair(const ObjectMap& f);

/// F <= G when cod(-,F-) <= cod(-,G-); equivalence is both ways.
bool map_leq(const ObjectMap& f, const ObjectMap& g);
bool map_equivalent(const ObjectMap& f, const ObjectMap& g);

struct Subgraph {
  EnrichedStructure sub;
  ObjectMap embedding;
};

Subgraph full_subgraph(const EnrichedStructure& s, const std::vector<int>& objects);

}  // namespace qorder
