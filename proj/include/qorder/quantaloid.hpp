#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qorder/lattice.hpp"

namespace qorder {

/// An arrow of the base: an element of hom(src, dst).
struct ArrowRef {
  Obj src = 0;
  Obj dst = 0;
  Elem elem = 0;
  bool operator==(const ArrowRef&) const = default;
};

struct QuantaloidReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// A finite base quantaloid given by explicit tables: one FiniteLattice per
/// hom, composition tables per object triple, and identity elements.
/// Residuation tables are precomputed at construction (hom carriers are tiny).
class Quantaloid {
 public:
  /// homs and elem_names indexed by src * objects + dst; comp indexed by
  /// (a * objects + b) * objects + c with layout table[g * |hom(a,b)| + f]
  /// for g in hom(b,c), f in hom(a,b) and entries in hom(a,c).
  Quantaloid(std::string name, std::vector<std::string> object_names,
             std::vector<FiniteLattice> homs,
             std::vector<std::vector<std::string>> elem_names,
             std::vector<std::vector<Elem>> comp, std::vector<Elem> ids);

  int objects() const { return n_; }
  const std::string& name() const { return name_; }
  const std::string& object_name(Obj a) const;
  std::optional<Obj> object_by_name(std::string_view name) const;

  const FiniteLattice& hom(Obj a, Obj b) const;
  const std::vector<std::string>& elem_names(Obj a, Obj b) const;
  std::optional<Elem> elem_by_name(Obj a, Obj b, std::string_view name) const;

  Elem id(Obj a) const;
  /// g ∘ f for f in hom(a,b), g in hom(b,c); result in hom(a,c).
  Elem compose(Obj a, Obj b, Obj c, Elem g, Elem f) const;
  ArrowRef compose(const ArrowRef& g, const ArrowRef& f) const;

  /// Largest x in hom(c,a) with f ∘ x <= h, for f in hom(a,b), h in hom(c,b).
  Elem lift(Obj a, Obj b, Obj c, Elem f, Elem h) const;
  /// Largest x in hom(b,c) with x ∘ f <= h, for f in hom(a,b), h in hom(a,c).
  Elem ext(Obj a, Obj b, Obj c, Elem f, Elem h) const;

  bool homs_valid() const { return homs_valid_; }

 private:
  size_t pair_index(Obj a, Obj b) const { return static_cast<size_t>(a) * n_ + b; }
  size_t triple_index(Obj a, Obj b, Obj c) const {
    return (static_cast<size_t>(a) * n_ + b) * n_ + c;
  }
  void check_obj(Obj a) const;
  void check_elem(Obj a, Obj b, Elem e) const;
  void prepare_residuals();

  std::string name_;
  int n_ = 0;
  std::vector<std::string> object_names_;
  std::vector<FiniteLattice> homs_;
  std::vector<std::vector<std::string>> elem_names_;
  std::vector<std::vector<Elem>> comp_;
  std::vector<Elem> ids_;
  std::vector<std::vector<Elem>> lift_, ext_;
  bool homs_valid_ = false;
};

using QuantaloidPtr = std::shared_ptr<const Quantaloid>;

/// Largest x with f ∘ x <= h; f and h must share their target object.
ArrowRef lifting(const Quantaloid& q, const ArrowRef& f, const ArrowRef& h);
/// Largest x with x ∘ f <= h; f and h must share their source object.
ArrowRef extension(const Quantaloid& q, const ArrowRef& f, const ArrowRef& h);

/// Checks hom-lattice axioms, unit laws, associativity and distribution of
/// composition over (empty, binary, and for small carriers all) joins.
QuantaloidReport validate_quantaloid(const Quantaloid& q);

std::vector<ArrowRef> idempotents(const Quantaloid& q, Obj a);
std::vector<ArrowRef> monads(const Quantaloid& q, Obj a);

struct MonadSplitting {
  Obj via = 0;         // the splitting object
  ArrowRef forward;    // f : src -> via
  ArrowRef backward;   // u : via -> src, with u∘f = monad and f∘u = id(via)
};

/// Exhaustive deterministic search (objects in id order, then (f, u)
/// lexicographic); the input must be a monad.
std::optional<MonadSplitting> split_monad(const Quantaloid& q, const ArrowRef& monad);

/// The split-idempotent completion together with the bookkeeping needed to
/// move elements between it and its source base.
struct IdmQuantaloid {
  QuantaloidPtr completed;
  QuantaloidPtr source;
  std::vector<ArrowRef> object_idem;            // per completed object
  std::vector<std::vector<Elem>> to_source;     // per completed hom pair
  std::vector<std::vector<Elem>> from_source;   // source elem -> completed elem or -1

  Obj object_of(const ArrowRef& idem) const;    // -1 when not an object
  Elem source_elem(Obj e, Obj f, Elem x) const;
  Elem completed_elem(Obj e, Obj f, Elem source_x) const;  // -1 when not a member
};

IdmQuantaloid build_idm(QuantaloidPtr base);

QuantaloidPtr fixture_q2();
QuantaloidPtr fixture_q3();
QuantaloidPtr fixture_p2();
QuantaloidPtr fixture_n3();
QuantaloidPtr fixture_trop(int cutoff);
/// Resolves "q2", "q3", "p2", "n3", "trop:<N>"; nullptr when unknown.
QuantaloidPtr fixture_by_name(std::string_view name);

}  // namespace qorder
