#pragma once

#include <span>
#include <string>
#include <vector>

#include "qorder/quantaloid.hpp"

namespace qorder {

/// A finite set whose elements carry an object of the base as type.
struct TypedSet {
  std::vector<std::string> names;
  std::vector<Obj> types;

  int size() const { return static_cast<int>(types.size()); }
};

TypedSet singleton_typed(Obj type, std::string name = "*");
/// Same size and same types; names are labels and do not participate.
bool same_typing(const TypedSet& a, const TypedSet& b);

/// A rows x cols matrix of base arrows: entry(r,c) lives in
/// hom(cols.type[c], rows.type[r]), i.e. it is an arrow from the column
/// element's type to the row element's type.
struct QMatrix {
  TypedSet rows, cols;
  std::vector<Elem> entries;

  Elem at(int r, int c) const { return entries[static_cast<size_t>(r) * cols.size() + c]; }
  Elem& at(int r, int c) { return entries[static_cast<size_t>(r) * cols.size() + c]; }
};

QMatrix make_matrix(const Quantaloid& q, TypedSet rows, TypedSet cols,
                    std::vector<Elem> entries);
QMatrix bottom_matrix(const Quantaloid& q, TypedSet rows, TypedSet cols);
bool matrices_equal(const QMatrix& x, const QMatrix& y);

/// (psi ⊗ phi)(c,a) = join over b of psi(c,b) ∘ phi(b,a); an empty middle
/// set gives the all-bottom matrix.
QMatrix compose(const Quantaloid& q, const QMatrix& psi, const QMatrix& phi);
QMatrix sup(const Quantaloid& q, std::span<const QMatrix> parallel);
bool leq_matrix(const Quantaloid& q, const QMatrix& lo, const QMatrix& hi);

/// Largest X with X ⊗ phi <= theta.
QMatrix mat_lifting(const Quantaloid& q, const QMatrix& phi, const QMatrix& theta);
/// Largest X with phi ⊗ X <= theta.
QMatrix mat_extension(const Quantaloid& q, const QMatrix& phi, const QMatrix& theta);

struct MonadMatrixFlags {
  bool monad = false;       // identities below the diagonal and M⊗M <= M
  bool idempotent = false;  // M⊗M = M
};

MonadMatrixFlags is_monad_matrix(const Quantaloid& q, const QMatrix& m);

}  // namespace qorder
