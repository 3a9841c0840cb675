#pragma once

#include "qorder/cauchy.hpp"

namespace qorder {

enum class SearchStatus { found, none, budget_exceeded };

/// Bounds for the exhaustive searches; exceeding them yields a distinct
/// "budget exceeded" verdict rather than a silent "none".
struct SearchBudget {
  int max_hom_elems = 8;
  int max_objects = 3;
  long long max_steps = 20'000'000;

  /// Reads QORDER_BUDGET (a step count) on top of the defaults.
  static SearchBudget from_env();
};

struct IsoWitness {
  SemiDistributor forward;   // A -|-> B
  SemiDistributor backward;  // B -|-> A
};

bool is_inverse_pair(const SemiDistributor& forward, const SemiDistributor& backward);

struct IsoSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<IsoWitness> witness;
};

/// Scans forward matrices in lexicographic order; the backward matrix of an
/// inverse pair is forced (it is the unique right adjoint), so candidates
/// are checked against the canonical one. A nested pair scan oracle in the
/// tests keeps this honest.
IsoSearchResult search_isomorphism(const EnrichedStructure& a, const EnrichedStructure& b,
                                   const SearchBudget& budget = SearchBudget::from_env());

struct EquivWitness {
  ObjectMap forward;   // F : A -> B
  ObjectMap backward;  // G : B -> A, with G∘F ≅ 1 and F∘G ≅ 1
};

struct EquivSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<EquivWitness> witness;
};

EquivSearchResult search_equivalence(const EnrichedStructure& a, const EnrichedStructure& b,
                                     const SearchBudget& budget = SearchBudget::from_env());

struct MoritaReport {
  IsoSearchResult iso;            // between the structures themselves
  EquivSearchResult equivalence;  // between their completions
  bool consistent = false;        // the two verdicts agree on existence
};

MoritaReport prop19_check(const EnrichedStructure& a, const EnrichedStructure& b,
                          const SearchBudget& budget = SearchBudget::from_env());

struct StripResult {
  EnrichedStructure stripped;
  std::vector<int> kept;
  IsoWitness witness;  // stripped -|-> original and back
  bool witness_verified = false;
};

/// Removes objects whose endo-hom sits below the unit (every hom touching
/// them is then forced to bottom). Only valid over the two-valued and
/// truncated tropical bases, where that argument applies; other bases are
/// refused.
StripResult strip_isolated(const EnrichedStructure& a);

}  // namespace qorder
