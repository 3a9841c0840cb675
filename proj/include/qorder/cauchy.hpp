#pragma once

#include <optional>

#include "qorder/structures.hpp"

namespace qorder {

/// A verified adjunction: unit dom <= right⊗left, counit left⊗right <= cod,
/// with identities taken to be the hom matrices of the two ends.
struct AdjointPair {
  SemiDistributor left;   // phi  : A -|-> B
  SemiDistributor right;  // phi* : B -|-> A
};

/// The canonical right-adjoint candidate for phi : A -|-> B. In the regular
/// calculus this is A ⊗ R ⊗ B for R the largest matrix with phi ⊗ R <= B;
/// between categories the raw residual R already works and both agree.
QMatrix right_adjoint_candidate(const Quantaloid& q, const EnrichedStructure& dom,
                                const EnrichedStructure& cod, const QMatrix& phi,
                                bool category_calculus = false);

/// Detects left adjoints by testing the canonical candidate; phi must be a
/// regular semidistributor (between categories that coincides with being a
/// distributor). Agrees with exhaustive right-adjoint search; tests gate this.
std::optional<AdjointPair> is_left_adjoint(const SemiDistributor& phi);

/// A map F with cod(-,F-) = left and cod(F-,-) = right, chosen column-first
/// in scan order. For adjoint input the per-column choices already force the
/// cross conditions, so candidates are independent per object.
std::optional<ObjectMap> converges(const AdjointPair& pair);

enum class ProbeKind { idempotent_homs, identity_homs };

struct ProbeEntry {
  ArrowRef idem;     // domain idempotent (an identity for identity_homs)
  QMatrix probe;     // phi  : *_e -|-> B   (|B| x 1)
  QMatrix adjoint;   // phi* : B -|-> *_e   (1 x |B|)
  std::optional<int> converges_to;  // object of B, when the probe converges
};

/// All left adjoint regular one-object probes into b, in deterministic order
/// (base objects ascending, idempotents ascending, entries lexicographic).
std::vector<ProbeEntry> sweep_probes(const EnrichedStructure& b, ProbeKind kind);

struct CompletenessReport {
  bool complete = true;
  std::vector<ProbeEntry> failures;  // non-converging probes, scan order
};

CompletenessReport is_cauchy_complete_trs(const EnrichedStructure& b);
CompletenessReport is_cauchy_complete_cat(const EnrichedStructure& b);

struct CompletionResult {
  EnrichedStructure completed;
  ObjectMap embed;                 // b -> its column probe; fully faithful
  std::vector<ProbeEntry> table;   // completed object i is table[i]
  bool embed_total = true;         // false only for merely regular input
};

/// The completion recipe itself: objects are the swept probes, homs are
/// adjoint-composites. Requires only regularity; the flavored wrappers add
/// their class preconditions.
CompletionResult complete_by_probes(const EnrichedStructure& b, ProbeKind kind);
CompletionResult cauchy_complete_trs(const EnrichedStructure& b);
CompletionResult cauchy_complete_cat(const EnrichedStructure& b);

/// One representative per class of objects with identical hom profiles.
CompletionResult skeletalize(const CompletionResult& c);

struct YonedaReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks the completion identities: hom(k b, phi) = phi(b),
/// hom(phi, k b) = phi*(b), full faithfulness of k, and that the pair of
/// matrices induced by k is an inverse pair.
YonedaReport yoneda_check(const EnrichedStructure& b, const CompletionResult& c);

/// Extends a regular semifunctor F : A -> B along the completion of A, for
/// Cauchy complete B: each completion object is sent to the convergence
/// point of cod(-,F-) ⊗ probe. Verifies G∘k ≅ F.
ObjectMap factor_through_completion(const ObjectMap& f, const CompletionResult& a_completed,
                                    bool verify_complete = true);

/// All left adjoint regular semidistributors A -|-> B, assembled column-wise
/// from B's one-object probes (every column of a left adjoint is one) and
/// then filtered by the actual adjointness test.
std::vector<SemiDistributor> enumerate_left_adjoints(const EnrichedStructure& a,
                                                     const EnrichedStructure& b);

}  // namespace qorder
