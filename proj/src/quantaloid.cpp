#include "qorder/quantaloid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qorder {

Quantaloid::Quantaloid(std::string name, std::vector<std::string> object_names,
                       std::vector<FiniteLattice> homs,
                       std::vector<std::vector<std::string>> elem_names,
                       std::vector<std::vector<Elem>> comp, std::vector<Elem> ids)
    : name_(std::move(name)),
      n_(static_cast<int>(object_names.size())),
      object_names_(std::move(object_names)),
      homs_(std::move(homs)),
      elem_names_(std::move(elem_names)),
      comp_(std::move(comp)),
      ids_(std::move(ids)) {
  if (n_ <= 0) throw input_error("quantaloid: needs at least one object");
  const size_t pairs = static_cast<size_t>(n_) * n_;
  if (homs_.size() != pairs || elem_names_.size() != pairs)
    throw input_error("quantaloid: hom table has the wrong shape");
  if (comp_.size() != pairs * n_ || ids_.size() != static_cast<size_t>(n_))
    throw input_error("quantaloid: composition/id tables have the wrong shape");
  for (size_t p = 0; p < pairs; ++p)
    if (elem_names_[p].size() != static_cast<size_t>(homs_[p].size()))
      throw input_error("quantaloid: element names do not match a hom carrier");
  for (Obj a = 0; a < n_; ++a)
    for (Obj b = 0; b < n_; ++b)
      for (Obj c = 0; c < n_; ++c) {
        const auto& t = comp_[triple_index(a, b, c)];
        const size_t want = static_cast<size_t>(hom(b, c).size()) * hom(a, b).size();
        if (t.size() != want)
          throw input_error("quantaloid: composition table has the wrong shape");
        for (Elem e : t)
          if (e < 0 || e >= hom(a, c).size())
            throw input_error("quantaloid: composition table entry outside carrier");
      }
  for (Obj a = 0; a < n_; ++a)
    if (ids_[a] < 0 || ids_[a] >= hom(a, a).size())
      throw input_error("quantaloid: identity element outside carrier");

  homs_valid_ = true;
  for (const auto& l : homs_) homs_valid_ = homs_valid_ && l.valid();
  if (homs_valid_) prepare_residuals();
}

void Quantaloid::check_obj(Obj a) const {
  if (a < 0 || a >= n_) throw input_error("quantaloid: object id out of range");
}

void Quantaloid::check_elem(Obj a, Obj b, Elem e) const {
  if (e < 0 || e >= hom(a, b).size())
    throw input_error("quantaloid: element id outside hom carrier");
}

const std::string& Quantaloid::object_name(Obj a) const {
  check_obj(a);
  return object_names_[a];
}

std::optional<Obj> Quantaloid::object_by_name(std::string_view name) const {
  for (Obj a = 0; a < n_; ++a)
    if (object_names_[a] == name) return a;
  return std::nullopt;
}

const FiniteLattice& Quantaloid::hom(Obj a, Obj b) const {
  check_obj(a);
  check_obj(b);
  return homs_[pair_index(a, b)];
}

const std::vector<std::string>& Quantaloid::elem_names(Obj a, Obj b) const {
  check_obj(a);
  check_obj(b);
  return elem_names_[pair_index(a, b)];
}

std::optional<Elem> Quantaloid::elem_by_name(Obj a, Obj b, std::string_view name) const {
  const auto& names = elem_names(a, b);
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem Quantaloid::id(Obj a) const {
  check_obj(a);
  return ids_[a];
}

Elem Quantaloid::compose(Obj a, Obj b, Obj c, Elem g, Elem f) const {
  check_elem(b, c, g);
  check_elem(a, b, f);
  return comp_[triple_index(a, b, c)][static_cast<size_t>(g) * hom(a, b).size() + f];
}

ArrowRef Quantaloid::compose(const ArrowRef& g, const ArrowRef& f) const {
  if (f.dst != g.src) throw input_error("quantaloid: arrows do not compose");
  return ArrowRef{f.src, g.dst, compose(f.src, f.dst, g.dst, g.elem, f.elem)};
}

void Quantaloid::prepare_residuals() {
  lift_.assign(static_cast<size_t>(n_) * n_ * n_, {});
  ext_.assign(static_cast<size_t>(n_) * n_ * n_, {});
  for (Obj a = 0; a < n_; ++a)
    for (Obj b = 0; b < n_; ++b)
      for (Obj c = 0; c < n_; ++c) {
        const auto& hab = hom(a, b);
        const auto& hcb = hom(c, b);
        const auto& hac = hom(a, c);
        auto& lt = lift_[triple_index(a, b, c)];
        lt.assign(static_cast<size_t>(hab.size()) * hcb.size(), -1);
        for (Elem f = 0; f < hab.size(); ++f)
          for (Elem h = 0; h < hcb.size(); ++h) {
            Elem acc = hom(c, a).bottom();
            for (Elem x = 0; x < hom(c, a).size(); ++x)
              if (hcb.raw_leq(compose(c, a, b, f, x), h))
                acc = hom(c, a).join_pair(acc, x);
            lt[static_cast<size_t>(f) * hcb.size() + h] = acc;
          }
        auto& et = ext_[triple_index(a, b, c)];
        et.assign(static_cast<size_t>(hab.size()) * hac.size(), -1);
        for (Elem f = 0; f < hab.size(); ++f)
          for (Elem h = 0; h < hac.size(); ++h) {
            Elem acc = hom(b, c).bottom();
            for (Elem x = 0; x < hom(b, c).size(); ++x)
              if (hac.raw_leq(compose(a, b, c, x, f), h))
                acc = hom(b, c).join_pair(acc, x);
            et[static_cast<size_t>(f) * hac.size() + h] = acc;
          }
      }
}

Elem Quantaloid::lift(Obj a, Obj b, Obj c, Elem f, Elem h) const {
  if (!homs_valid_) throw input_error("quantaloid: hom lattices are not complete");
  check_elem(a, b, f);
  check_elem(c, b, h);
  return lift_[triple_index(a, b, c)][static_cast<size_t>(f) * hom(c, b).size() + h];
}

Elem Quantaloid::ext(Obj a, Obj b, Obj c, Elem f, Elem h) const {
  if (!homs_valid_) throw input_error("quantaloid: hom lattices are not complete");
  check_elem(a, b, f);
  check_elem(a, c, h);
  return ext_[triple_index(a, b, c)][static_cast<size_t>(f) * hom(a, c).size() + h];
}

ArrowRef lifting(const Quantaloid& q, const ArrowRef& f, const ArrowRef& h) {
  if (f.dst != h.dst) throw input_error("lifting: arrows must share their target");
  return ArrowRef{h.src, f.src, q.lift(f.src, f.dst, h.src, f.elem, h.elem)};
}

ArrowRef extension(const Quantaloid& q, const ArrowRef& f, const ArrowRef& h) {
  if (f.src != h.src) throw input_error("extension: arrows must share their source");
  return ArrowRef{f.dst, h.dst, q.ext(f.src, f.dst, h.dst, f.elem, h.elem)};
}

namespace {

std::string arrow_str(const Quantaloid& q, Obj a, Obj b, Elem e) {
  std::ostringstream os;
  os << q.elem_names(a, b)[e] << " : " << q.object_name(a) << " -> " << q.object_name(b);
  return os.str();
}

}  // namespace

QuantaloidReport validate_quantaloid(const Quantaloid& q) {
  QuantaloidReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  const int n = q.objects();
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      LatticeReport lr = validate_lattice(q.hom(a, b));
      for (const auto& v : lr.violations)
        fail("hom(" + q.object_name(a) + "," + q.object_name(b) + "): " + v);
    }
  if (!rep.ok || !q.homs_valid()) return rep;

  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Elem f = 0; f < q.hom(a, b).size(); ++f) {
        if (q.compose(a, a, b, f, q.id(a)) != f)
          fail("unit law fails: " + arrow_str(q, a, b, f) + " ∘ id");
        if (q.compose(a, b, b, q.id(b), f) != f)
          fail("unit law fails: id ∘ " + arrow_str(q, a, b, f));
      }

  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c)
        for (Obj d = 0; d < n; ++d)
          for (Elem f = 0; f < q.hom(a, b).size(); ++f)
            for (Elem g = 0; g < q.hom(b, c).size(); ++g)
              for (Elem h = 0; h < q.hom(c, d).size(); ++h) {
                Elem left = q.compose(a, c, d, h, q.compose(a, b, c, g, f));
                Elem right = q.compose(a, b, d, q.compose(b, c, d, h, g), f);
                if (left != right)
                  fail("associativity fails on (" + arrow_str(q, c, d, h) + ", " +
                       arrow_str(q, b, c, g) + ", " + arrow_str(q, a, b, f) + ")");
              }

  // Distribution over joins: empty and binary joins suffice (finite carriers),
  // but small carriers are swept over every subset to keep witnesses concrete.
  auto check_left = [&](Obj a, Obj b, Obj c, Elem g, const std::vector<Elem>& sub) {
    const auto& hab = q.hom(a, b);
    Elem joined = hab.join(sub);
    Elem lhs = q.compose(a, b, c, g, joined);
    Elem rhs = q.hom(a, c).bottom();
    for (Elem s : sub) rhs = q.hom(a, c).join_pair(rhs, q.compose(a, b, c, g, s));
    if (lhs != rhs) {
      std::ostringstream os;
      os << "join distribution fails: " << arrow_str(q, b, c, g) << " ∘ (join of "
         << sub.size() << " elements of hom(" << q.object_name(a) << ","
         << q.object_name(b) << "))";
      fail(os.str());
    }
  };
  auto check_right = [&](Obj a, Obj b, Obj c, Elem f, const std::vector<Elem>& sub) {
    const auto& hbc = q.hom(b, c);
    Elem joined = hbc.join(sub);
    Elem lhs = q.compose(a, b, c, joined, f);
    Elem rhs = q.hom(a, c).bottom();
    for (Elem s : sub) rhs = q.hom(a, c).join_pair(rhs, q.compose(a, b, c, s, f));
    if (lhs != rhs) {
      std::ostringstream os;
      os << "join distribution fails: (join of " << sub.size() << " elements of hom("
         << q.object_name(b) << "," << q.object_name(c) << ")) ∘ "
         << arrow_str(q, a, b, f);
      fail(os.str());
    }
  };
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c) {
        const int nab = q.hom(a, b).size();
        const int nbc = q.hom(b, c).size();
        for (Elem g = 0; g < nbc; ++g) {
          if (nab <= 10) {
            for (unsigned mask = 0; mask < (1u << nab); ++mask) {
              std::vector<Elem> sub;
              for (Elem x = 0; x < nab; ++x)
                if (mask & (1u << x)) sub.push_back(x);
              check_left(a, b, c, g, sub);
            }
          } else {
            check_left(a, b, c, g, {});
            for (Elem x = 0; x < nab; ++x)
              for (Elem y = x; y < nab; ++y) check_left(a, b, c, g, {x, y});
          }
        }
        for (Elem f = 0; f < nab; ++f) {
          if (nbc <= 10) {
            for (unsigned mask = 0; mask < (1u << nbc); ++mask) {
              std::vector<Elem> sub;
              for (Elem x = 0; x < nbc; ++x)
                if (mask & (1u << x)) sub.push_back(x);
              check_right(a, b, c, f, sub);
            }
          } else {
            check_right(a, b, c, f, {});
            for (Elem x = 0; x < nbc; ++x)
              for (Elem y = x; y < nbc; ++y) check_right(a, b, c, f, {x, y});
          }
        }
      }
  return rep;
}

std::vector<ArrowRef> idempotents(const Quantaloid& q, Obj a) {
  std::vector<ArrowRef> out;
  for (Elem e = 0; e < q.hom(a, a).size(); ++e)
    if (q.compose(a, a, a, e, e) == e) out.push_back(ArrowRef{a, a, e});
  return out;
}

std::vector<ArrowRef> monads(const Quantaloid& q, Obj a) {
  std::vector<ArrowRef> out;
  const auto& h = q.hom(a, a);
  for (Elem t = 0; t < h.size(); ++t)
    if (h.raw_leq(q.id(a), t) && h.raw_leq(q.compose(a, a, a, t, t), t))
      out.push_back(ArrowRef{a, a, t});
  return out;
}

std::optional<MonadSplitting> split_monad(const Quantaloid& q, const ArrowRef& monad) {
  if (monad.src != monad.dst) throw input_error("split_monad: not an endo-arrow");
  const Obj a = monad.src;
  const auto& h = q.hom(a, a);
  if (!h.raw_leq(q.id(a), monad.elem) ||
      !h.raw_leq(q.compose(a, a, a, monad.elem, monad.elem), monad.elem))
    throw input_error("split_monad: arrow is not a monad");
  for (Obj b = 0; b < q.objects(); ++b)
    for (Elem f = 0; f < q.hom(a, b).size(); ++f)
      for (Elem u = 0; u < q.hom(b, a).size(); ++u)
        if (q.compose(a, b, a, u, f) == monad.elem &&
            q.compose(b, a, b, f, u) == q.id(b))
          return MonadSplitting{b, ArrowRef{a, b, f}, ArrowRef{b, a, u}};
  return std::nullopt;
}

Obj IdmQuantaloid::object_of(const ArrowRef& idem) const {
  for (size_t i = 0; i < object_idem.size(); ++i)
    if (object_idem[i] == idem) return static_cast<Obj>(i);
  return -1;
}

Elem IdmQuantaloid::source_elem(Obj e, Obj f, Elem x) const {
  return to_source[static_cast<size_t>(e) * completed->objects() + f][x];
}

Elem IdmQuantaloid::completed_elem(Obj e, Obj f, Elem source_x) const {
  return from_source[static_cast<size_t>(e) * completed->objects() + f][source_x];
}

IdmQuantaloid build_idm(QuantaloidPtr base) {
  if (!base || !base->homs_valid())
    throw input_error("build_idm: base quantaloid is not usable");
  const Quantaloid& q = *base;

  std::vector<ArrowRef> objs;
  for (Obj a = 0; a < q.objects(); ++a)
    for (const ArrowRef& e : idempotents(q, a)) objs.push_back(e);
  const int m = static_cast<int>(objs.size());
  if (m == 0) throw input_error("build_idm: base has no idempotents");

  std::vector<std::string> obj_names(m);
  for (int i = 0; i < m; ++i) {
    const auto& en = q.elem_names(objs[i].src, objs[i].src)[objs[i].elem];
    obj_names[i] = q.objects() == 1 ? en : q.object_name(objs[i].src) + "." + en;
  }

  std::vector<std::vector<Elem>> to_src(static_cast<size_t>(m) * m);
  std::vector<std::vector<Elem>> from_src(static_cast<size_t>(m) * m);
  std::vector<FiniteLattice> homs(static_cast<size_t>(m) * m);
  std::vector<std::vector<std::string>> elem_names(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Obj A = objs[i].src, B = objs[j].src;
      const Elem e = objs[i].elem, f = objs[j].elem;
      const auto& hab = q.hom(A, B);
      std::vector<Elem> members;
      std::vector<Elem> reverse(hab.size(), -1);
      for (Elem b = 0; b < hab.size(); ++b)
        if (q.compose(A, A, B, b, e) == b && q.compose(A, B, B, f, b) == b) {
          reverse[b] = static_cast<Elem>(members.size());
          members.push_back(b);
        }
      const int k = static_cast<int>(members.size());
      std::vector<std::uint8_t> leq(static_cast<size_t>(k) * k, 0);
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
          leq[static_cast<size_t>(x) * k + y] = hab.raw_leq(members[x], members[y]) ? 1 : 0;
      homs[static_cast<size_t>(i) * m + j] = FiniteLattice(k, std::move(leq));
      std::vector<std::string> names(k);
      for (int x = 0; x < k; ++x) names[x] = q.elem_names(A, B)[members[x]];
      elem_names[static_cast<size_t>(i) * m + j] = std::move(names);
      to_src[static_cast<size_t>(i) * m + j] = std::move(members);
      from_src[static_cast<size_t>(i) * m + j] = std::move(reverse);
    }

  auto pair = [m](int i, int j) { return static_cast<size_t>(i) * m + j; };
  std::vector<std::vector<Elem>> comp(static_cast<size_t>(m) * m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const auto& ms_ij = to_src[pair(i, j)];
        const auto& ms_jk = to_src[pair(j, k)];
        const auto& back_ik = from_src[pair(i, k)];
        std::vector<Elem> table(ms_jk.size() * ms_ij.size(), -1);
        for (size_t g = 0; g < ms_jk.size(); ++g)
          for (size_t f = 0; f < ms_ij.size(); ++f) {
            Elem v = q.compose(objs[i].src, objs[j].src, objs[k].src, ms_jk[g], ms_ij[f]);
            table[g * ms_ij.size() + f] = back_ik[v];
          }
        comp[(pair(i, j)) * m + k] = std::move(table);
      }

  std::vector<Elem> ids(m);
  for (int i = 0; i < m; ++i) ids[i] = from_src[pair(i, i)][objs[i].elem];

  std::string name = q.name().empty() ? std::string() : "idm:" + q.name();
  IdmQuantaloid out;
  out.completed = std::make_shared<Quantaloid>(std::move(name), std::move(obj_names),
                                               std::move(homs), std::move(elem_names),
                                               std::move(comp), std::move(ids));
  out.source = std::move(base);
  out.object_idem = std::move(objs);
  out.to_source = std::move(to_src);
  out.from_source = std::move(from_src);
  return out;
}

namespace {

QuantaloidPtr make_quantale(std::string name, FiniteLattice lattice,
                            std::vector<std::string> elem_names,
                            const std::vector<std::vector<Elem>>& table, Elem unit) {
  const int k = lattice.size();
  std::vector<Elem> comp(static_cast<size_t>(k) * k);
  for (Elem g = 0; g < k; ++g)
    for (Elem f = 0; f < k; ++f) comp[static_cast<size_t>(g) * k + f] = table[g][f];
  return std::make_shared<Quantaloid>(
      std::move(name), std::vector<std::string>{"*"},
      std::vector<FiniteLattice>{std::move(lattice)},
      std::vector<std::vector<std::string>>{std::move(elem_names)},
      std::vector<std::vector<Elem>>{std::move(comp)}, std::vector<Elem>{unit});
}

std::vector<std::vector<Elem>> meet_table(const FiniteLattice& l) {
  std::vector<std::vector<Elem>> t(l.size(), std::vector<Elem>(l.size()));
  for (Elem g = 0; g < l.size(); ++g)
    for (Elem f = 0; f < l.size(); ++f) t[g][f] = l.meet_pair(g, f);
  return t;
}

}  // namespace

QuantaloidPtr fixture_q2() {
  static QuantaloidPtr q = [] {
    FiniteLattice l = FiniteLattice::chain(2);
    auto t = meet_table(l);
    return make_quantale("q2", std::move(l), {"0", "1"}, t, 1);
  }();
  return q;
}

QuantaloidPtr fixture_q3() {
  static QuantaloidPtr q = [] {
    FiniteLattice l = FiniteLattice::chain(3);
    auto t = meet_table(l);
    return make_quantale("q3", std::move(l), {"0", "m", "1"}, t, 2);
  }();
  return q;
}

QuantaloidPtr fixture_p2() {
  static QuantaloidPtr q = [] {
    FiniteLattice l = FiniteLattice::powerset(2);
    auto t = meet_table(l);
    return make_quantale("p2", std::move(l), {"0", "a", "b", "1"}, t, 3);
  }();
  return q;
}

QuantaloidPtr fixture_n3() {
  // Chain 0 < 1 < t with unit 1 and t∘t = t.
  static QuantaloidPtr q = [] {
    FiniteLattice l = FiniteLattice::chain(3);
    std::vector<std::vector<Elem>> t(3, std::vector<Elem>(3));
    for (Elem g = 0; g < 3; ++g)
      for (Elem f = 0; f < 3; ++f) {
        if (g == 0 || f == 0)
          t[g][f] = 0;
        else if (g == 1)
          t[g][f] = f;
        else
          t[g][f] = 2;
      }
    return make_quantale("n3", std::move(l), {"0", "1", "t"}, t, 1);
  }();
  return q;
}

QuantaloidPtr fixture_trop(int cutoff) {
  if (cutoff < 1) throw input_error("trop fixture: cutoff must be at least 1");
  static std::map<int, QuantaloidPtr> cache;
  auto it = cache.find(cutoff);
  if (it != cache.end()) return it->second;
  FiniteLattice l = FiniteLattice::reversed_chain(cutoff + 1);
  std::vector<std::string> names(cutoff + 1);
  std::vector<std::vector<Elem>> t(cutoff + 1, std::vector<Elem>(cutoff + 1));
  for (Elem g = 0; g <= cutoff; ++g) {
    names[g] = std::to_string(g);
    for (Elem f = 0; f <= cutoff; ++f) t[g][f] = std::min(g + f, cutoff);
  }
  QuantaloidPtr q = make_quantale("trop:" + std::to_string(cutoff), std::move(l),
                                  std::move(names), t, 0);
  cache.emplace(cutoff, q);
  return q;
}

QuantaloidPtr fixture_by_name(std::string_view name) {
  if (name == "q2") return fixture_q2();
  if (name == "q3") return fixture_q3();
  if (name == "p2") return fixture_p2();
  if (name == "n3") return fixture_n3();
  if (name.substr(0, 5) == "trop:") {
    int cutoff = 0;
    for (char c : name.substr(5)) {
      if (c < '0' || c > '9') return nullptr;
      cutoff = cutoff * 10 + (c - '0');
    }
    if (cutoff < 1 || cutoff > 64) return nullptr;
    return fixture_trop(cutoff);
  }
  return nullptr;
}

}  // namespace qorder
