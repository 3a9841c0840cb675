#pragma once

#include <cstdint>
#include <functional>

#include "qorder/structures.hpp"

namespace qorder {

enum class StructClass {
  any,
  semicategory,
  regular,
  totally_regular,
  category,
  normal_category,
};

bool has_class(const StructureFlags& flags, StructClass cls);

/// Every structure with at most max_objects objects over the base (all type
/// tuples, all hom tables) carrying the requested class flag, in a fixed
/// deterministic order. Includes the empty structure.
std::vector<EnrichedStructure> enumerate_structures(QuantaloidPtr base, int max_objects,
                                                    StructClass cls);

/// All matrices between two typed sets, lexicographic entry order.
void for_each_matrix(const Quantaloid& q, const TypedSet& rows, const TypedSet& cols,
                     const std::function<void(const QMatrix&)>& fn);

/// All type-preserving image tuples dom -> cod, lexicographic order;
/// fn may return true to stop early.
void for_each_object_map(const EnrichedStructure& dom, const EnrichedStructure& cod,
                         const std::function<bool(const std::vector<int>&)>& fn);

/// Deterministic generator for the sampled suites.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace qorder
