#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qorder/core.hpp"

namespace qorder {

struct LatticeReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// A finite complete lattice on elements 0..size()-1, stored as the full
/// order table. Pairwise join/meet tables and bottom/top are precomputed at
/// construction; a lattice that fails the axioms is kept around in an
/// invalid state so validate_lattice can describe what is wrong.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  /// leq is row-major: leq[x * size + y] != 0 iff x <= y.
  FiniteLattice(int size, std::vector<std::uint8_t> leq);

  static FiniteLattice chain(int size);
  static FiniteLattice powerset(int atoms);
  /// Numeric order reversed: x <= y iff x >= y as integers.
  static FiniteLattice reversed_chain(int size);
  /// Reflexive-transitive closure of the given covers.
  static FiniteLattice from_below(int size,
                                  const std::vector<std::pair<Elem, Elem>>& below);

  int size() const { return n_; }
  bool valid() const { return valid_; }

  bool leq(Elem x, Elem y) const;
  Elem join_pair(Elem x, Elem y) const;
  Elem meet_pair(Elem x, Elem y) const;
  Elem join(std::span<const Elem> xs) const;  // join({}) = bottom
  Elem meet(std::span<const Elem> xs) const;  // meet({}) = top
  Elem bottom() const;
  Elem top() const;

  bool operator==(const FiniteLattice&) const = default;

  bool raw_leq(Elem x, Elem y) const { return leq_[static_cast<size_t>(x) * n_ + y] != 0; }

 private:
  void prepare();
  void check_range(Elem x) const;

  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_, meet_;  // pairwise tables, -1 where undefined
  Elem bottom_ = -1, top_ = -1;
  bool valid_ = false;
};

/// Full axiom report: poset laws, bottom/top, and existence of pairwise
/// suprema/infima (which, for a finite poset, pins down completeness).
/// Every failure carries a witnessing element set.
LatticeReport validate_lattice(const FiniteLattice& l);

}  // namespace qorder
