#include "qorder/qmatrix.hpp"

namespace qorder {

TypedSet singleton_typed(Obj type, std::string name) {
  return TypedSet{{std::move(name)}, {type}};
}

bool same_typing(const TypedSet& a, const TypedSet& b) { return a.types == b.types; }

QMatrix make_matrix(const Quantaloid& q, TypedSet rows, TypedSet cols,
                    std::vector<Elem> entries) {
  if (entries.size() != static_cast<size_t>(rows.size()) * cols.size())
    throw input_error("matrix: entry count does not match the shape");
  for (Obj t : rows.types)
    if (t < 0 || t >= q.objects()) throw input_error("matrix: row type is not an object");
  for (Obj t : cols.types)
    if (t < 0 || t >= q.objects()) throw input_error("matrix: column type is not an object");
  for (int r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols.size(); ++c) {
      Elem e = entries[static_cast<size_t>(r) * cols.size() + c];
      if (e < 0 || e >= q.hom(cols.types[c], rows.types[r]).size())
        throw input_error("matrix: entry outside its hom carrier");
    }
  return QMatrix{std::move(rows), std::move(cols), std::move(entries)};
}

QMatrix bottom_matrix(const Quantaloid& q, TypedSet rows, TypedSet cols) {
  std::vector<Elem> entries(static_cast<size_t>(rows.size()) * cols.size());
  for (int r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols.size(); ++c)
      entries[static_cast<size_t>(r) * cols.size() + c] =
          q.hom(cols.types[c], rows.types[r]).bottom();
  return QMatrix{std::move(rows), std::move(cols), std::move(entries)};
}

bool matrices_equal(const QMatrix& x, const QMatrix& y) {
  return same_typing(x.rows, y.rows) && same_typing(x.cols, y.cols) &&
         x.entries == y.entries;
}

QMatrix compose(const Quantaloid& q, const QMatrix& psi, const QMatrix& phi) {
  if (!same_typing(psi.cols, phi.rows))
    throw input_error("compose: middle typed sets do not match");
  QMatrix out = bottom_matrix(q, psi.rows, phi.cols);
  const int mid = psi.cols.size();
  for (int r = 0; r < out.rows.size(); ++r)
    for (int c = 0; c < out.cols.size(); ++c) {
      const auto& target = q.hom(out.cols.types[c], out.rows.types[r]);
      Elem acc = target.bottom();
      for (int b = 0; b < mid; ++b) {
        Elem term = q.compose(phi.cols.types[c], phi.rows.types[b], psi.rows.types[r],
                              psi.at(r, b), phi.at(b, c));
        acc = target.join_pair(acc, term);
      }
      out.at(r, c) = acc;
    }
  return out;
}

QMatrix sup(const Quantaloid& q, std::span<const QMatrix> parallel) {
  if (parallel.empty()) throw input_error("sup: family must be nonempty");
  for (const QMatrix& m : parallel)
    if (!same_typing(m.rows, parallel[0].rows) || !same_typing(m.cols, parallel[0].cols))
      throw input_error("sup: matrices are not parallel");
  QMatrix out = parallel[0];
  for (size_t i = 1; i < parallel.size(); ++i)
    for (int r = 0; r < out.rows.size(); ++r)
      for (int c = 0; c < out.cols.size(); ++c)
        out.at(r, c) = q.hom(out.cols.types[c], out.rows.types[r])
                           .join_pair(out.at(r, c), parallel[i].at(r, c));
  return out;
}

bool leq_matrix(const Quantaloid& q, const QMatrix& lo, const QMatrix& hi) {
  if (!same_typing(lo.rows, hi.rows) || !same_typing(lo.cols, hi.cols))
    throw input_error("leq_matrix: matrices are not parallel");
  for (int r = 0; r < lo.rows.size(); ++r)
    for (int c = 0; c < lo.cols.size(); ++c)
      if (!q.hom(lo.cols.types[c], lo.rows.types[r]).leq(lo.at(r, c), hi.at(r, c)))
        return false;
  return true;
}

QMatrix mat_lifting(const Quantaloid& q, const QMatrix& phi, const QMatrix& theta) {
  if (!same_typing(phi.cols, theta.cols))
    throw input_error("mat_lifting: matrices must share their column set");
  // X: theta.rows x phi.rows, X(c,b) = meet over a of ext(phi(b,a), theta(c,a)).
  QMatrix out;
  out.rows = theta.rows;
  out.cols = phi.rows;
  out.entries.assign(static_cast<size_t>(out.rows.size()) * out.cols.size(), 0);
  for (int c = 0; c < out.rows.size(); ++c)
    for (int b = 0; b < out.cols.size(); ++b) {
      const auto& target = q.hom(phi.rows.types[b], theta.rows.types[c]);
      Elem acc = target.top();
      for (int a = 0; a < phi.cols.size(); ++a) {
        Elem res = q.ext(phi.cols.types[a], phi.rows.types[b], theta.rows.types[c],
                         phi.at(b, a), theta.at(c, a));
        acc = target.meet_pair(acc, res);
      }
      out.at(c, b) = acc;
    }
  return out;
}

QMatrix mat_extension(const Quantaloid& q, const QMatrix& phi, const QMatrix& theta) {
  if (!same_typing(phi.rows, theta.rows))
    throw input_error("mat_extension: matrices must share their row set");
  // X: phi.cols x theta.cols, X(b,a) = meet over c of lift(phi(c,b), theta(c,a)).
  QMatrix out;
  out.rows = phi.cols;
  out.cols = theta.cols;
  out.entries.assign(static_cast<size_t>(out.rows.size()) * out.cols.size(), 0);
  for (int b = 0; b < out.rows.size(); ++b)
    for (int a = 0; a < out.cols.size(); ++a) {
      const auto& target = q.hom(theta.cols.types[a], phi.cols.types[b]);
      Elem acc = target.top();
      for (int c = 0; c < phi.rows.size(); ++c) {
        Elem res = q.lift(phi.cols.types[b], phi.rows.types[c], theta.cols.types[a],
                          phi.at(c, b), theta.at(c, a));
        acc = target.meet_pair(acc, res);
      }
      out.at(b, a) = acc;
    }
  return out;
}

MonadMatrixFlags is_monad_matrix(const Quantaloid& q, const QMatrix& m) {
  if (!same_typing(m.rows, m.cols)) throw input_error("is_monad_matrix: matrix not square");
  MonadMatrixFlags flags;
  QMatrix mm = compose(q, m, m);
  bool below = leq_matrix(q, mm, m);
  bool unit = true;
  for (int a = 0; a < m.rows.size(); ++a)
    unit = unit && q.hom(m.rows.types[a], m.rows.types[a]).leq(q.id(m.rows.types[a]),
                                                               m.at(a, a));
  flags.monad = below && unit;
  flags.idempotent = matrices_equal(mm, m);
  return flags;
}

}  // namespace qorder
