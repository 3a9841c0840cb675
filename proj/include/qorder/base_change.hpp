#pragma once

#include "qorder/structures.hpp"

namespace qorder {

/// A totally regular structure over Q next to its retyped twin over Idm(Q):
/// same objects, types moved to the endo-hom idempotents, hom tables equal
/// as base elements. The object bijection is the identity on indices.
struct ReshuffleWitness {
  EnrichedStructure source;  // over idm.source
  EnrichedStructure target;  // over idm.completed, normal
};

ReshuffleWitness reshuffle(const EnrichedStructure& a, const IdmQuantaloid& idm);
EnrichedStructure unreshuffle(const EnrichedStructure& c, const IdmQuantaloid& idm);

/// Transport of a matrix between reshuffled structures (entries unchanged).
QMatrix reshuffle_matrix(const QMatrix& mat, const EnrichedStructure& dom,
                         const EnrichedStructure& cod, const ReshuffleWitness& dom_w,
                         const ReshuffleWitness& cod_w, const IdmQuantaloid& idm);

struct SplitEntry {
  int object = 0;
  ArrowRef monad;      // the endo-hom to split
  Obj via = 0;         // splitting object
  ArrowRef forward;    // f : type -> via
  ArrowRef backward;   // u : via -> type
};

struct SplittingChoice {
  std::vector<SplitEntry> entries;  // one per object, in object order
};

struct NormalizeResult {
  EnrichedStructure normalized;  // identity endo-homs, same object count
  QMatrix to_normalized;         // a -|-> normalized
  QMatrix from_normalized;       // normalized -|-> a
  SplittingChoice choice;
  bool inverse_pair_verified = false;
};

struct NormalizeOutcome {
  std::optional<NormalizeResult> result;
  std::string error;
  int offending_object = -1;
};

/// Rewrites a category whose endo-homs split into one with identity
/// endo-homs, together with the exact inverse pair of matrices between the
/// two. Without a supplied choice, splittings come from split_monad.
NormalizeOutcome normalize_category(const EnrichedStructure& a,
                                    const std::optional<SplittingChoice>& choice = {});

}  // namespace qorder
