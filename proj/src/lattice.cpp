#include "qorder/lattice.hpp"

#include <sstream>

namespace qorder {

namespace {

std::string pair_set(Elem x, Elem y) {
  std::ostringstream os;
  os << "{" << x << ", " << y << "}";
  return os.str();
}

}  // namespace

FiniteLattice::FiniteLattice(int size, std::vector<std::uint8_t> leq)
    : n_(size), leq_(std::move(leq)) {
  if (n_ < 0 || leq_.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_))
    throw input_error("lattice: order table has the wrong size");
  prepare();
}

FiniteLattice FiniteLattice::chain(int size) {
  std::vector<std::uint8_t> leq(static_cast<size_t>(size) * size, 0);
  for (Elem x = 0; x < size; ++x)
    for (Elem y = x; y < size; ++y) leq[static_cast<size_t>(x) * size + y] = 1;
  return FiniteLattice(size, std::move(leq));
}

FiniteLattice FiniteLattice::reversed_chain(int size) {
  std::vector<std::uint8_t> leq(static_cast<size_t>(size) * size, 0);
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y <= x; ++y) leq[static_cast<size_t>(x) * size + y] = 1;
  return FiniteLattice(size, std::move(leq));
}

FiniteLattice FiniteLattice::powerset(int atoms) {
  const int n = 1 << atoms;
  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      leq[static_cast<size_t>(x) * n + y] = (x & ~y) == 0 ? 1 : 0;
  return FiniteLattice(n, std::move(leq));
}

FiniteLattice FiniteLattice::from_below(int size,
                                        const std::vector<std::pair<Elem, Elem>>& below) {
  std::vector<std::uint8_t> leq(static_cast<size_t>(size) * size, 0);
  for (Elem x = 0; x < size; ++x) leq[static_cast<size_t>(x) * size + x] = 1;
  for (auto [lo, hi] : below) leq[static_cast<size_t>(lo) * size + hi] = 1;
  for (Elem k = 0; k < size; ++k)
    for (Elem x = 0; x < size; ++x)
      for (Elem y = 0; y < size; ++y)
        if (leq[static_cast<size_t>(x) * size + k] && leq[static_cast<size_t>(k) * size + y])
          leq[static_cast<size_t>(x) * size + y] = 1;
  return FiniteLattice(size, std::move(leq));
}

void FiniteLattice::prepare() {
  valid_ = n_ > 0;
  for (Elem x = 0; x < n_ && valid_; ++x)
    if (!raw_leq(x, x)) valid_ = false;
  for (Elem x = 0; x < n_ && valid_; ++x)
    for (Elem y = 0; y < n_ && valid_; ++y) {
      if (x != y && raw_leq(x, y) && raw_leq(y, x)) valid_ = false;
      for (Elem z = 0; z < n_ && valid_; ++z)
        if (raw_leq(x, y) && raw_leq(y, z) && !raw_leq(x, z)) valid_ = false;
    }
  if (!valid_) return;

  join_.assign(static_cast<size_t>(n_) * n_, -1);
  meet_.assign(static_cast<size_t>(n_) * n_, -1);
  for (Elem x = 0; x < n_ && valid_; ++x)
    for (Elem y = 0; y < n_ && valid_; ++y) {
      Elem lub = -1, glb = -1;
      for (Elem u = 0; u < n_; ++u) {
        if (raw_leq(x, u) && raw_leq(y, u)) {
          bool least = true;
          for (Elem v = 0; v < n_ && least; ++v)
            if (raw_leq(x, v) && raw_leq(y, v) && !raw_leq(u, v)) least = false;
          if (least) lub = u;
        }
        if (raw_leq(u, x) && raw_leq(u, y)) {
          bool greatest = true;
          for (Elem v = 0; v < n_ && greatest; ++v)
            if (raw_leq(v, x) && raw_leq(v, y) && !raw_leq(v, u)) greatest = false;
          if (greatest) glb = u;
        }
      }
      if (lub < 0 || glb < 0) {
        valid_ = false;
        break;
      }
      join_[static_cast<size_t>(x) * n_ + y] = lub;
      meet_[static_cast<size_t>(x) * n_ + y] = glb;
    }
  if (!valid_) return;

  for (Elem b = 0; b < n_; ++b) {
    bool least = true, greatest = true;
    for (Elem y = 0; y < n_; ++y) {
      if (!raw_leq(b, y)) least = false;
      if (!raw_leq(y, b)) greatest = false;
    }
    if (least) bottom_ = b;
    if (greatest) top_ = b;
  }
  if (bottom_ < 0 || top_ < 0) valid_ = false;
}

void FiniteLattice::check_range(Elem x) const {
  if (x < 0 || x >= n_) throw input_error("lattice: element id outside carrier");
}

bool FiniteLattice::leq(Elem x, Elem y) const {
  check_range(x);
  check_range(y);
  return raw_leq(x, y);
}

Elem FiniteLattice::join_pair(Elem x, Elem y) const {
  check_range(x);
  check_range(y);
  if (!valid_) throw input_error("lattice: not a complete lattice");
  return join_[static_cast<size_t>(x) * n_ + y];
}

Elem FiniteLattice::meet_pair(Elem x, Elem y) const {
  check_range(x);
  check_range(y);
  if (!valid_) throw input_error("lattice: not a complete lattice");
  return meet_[static_cast<size_t>(x) * n_ + y];
}

Elem FiniteLattice::join(std::span<const Elem> xs) const {
  Elem acc = bottom();
  for (Elem x : xs) acc = join_pair(acc, x);
  return acc;
}

Elem FiniteLattice::meet(std::span<const Elem> xs) const {
  Elem acc = top();
  for (Elem x : xs) acc = meet_pair(acc, x);
  return acc;
}

Elem FiniteLattice::bottom() const {
  if (!valid_) throw input_error("lattice: not a complete lattice");
  return bottom_;
}

Elem FiniteLattice::top() const {
  if (!valid_) throw input_error("lattice: not a complete lattice");
  return top_;
}

LatticeReport validate_lattice(const FiniteLattice& l) {
  LatticeReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  const int n = l.size();
  if (n == 0) {
    fail("empty carrier: no supremum for {} (no bottom element)");
    return rep;
  }

  bool poset = true;
  for (Elem x = 0; x < n; ++x)
    if (!l.raw_leq(x, x)) {
      fail("not reflexive at {" + std::to_string(x) + "}");
      poset = false;
    }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (l.raw_leq(x, y) && l.raw_leq(y, x)) {
        fail("not antisymmetric on " + pair_set(x, y));
        poset = false;
      }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (l.raw_leq(x, y) && l.raw_leq(y, z) && !l.raw_leq(x, z)) {
          std::ostringstream os;
          os << "not transitive on {" << x << ", " << y << ", " << z << "}";
          fail(os.str());
          poset = false;
        }
  if (!poset) return rep;

  // For a finite poset, bottom, top and all pairwise bounds force every
  // subset to have a supremum and an infimum.
  bool has_bottom = false, has_top = false;
  for (Elem b = 0; b < n; ++b) {
    bool least = true, greatest = true;
    for (Elem y = 0; y < n; ++y) {
      least = least && l.raw_leq(b, y);
      greatest = greatest && l.raw_leq(y, b);
    }
    has_bottom = has_bottom || least;
    has_top = has_top || greatest;
  }
  if (!has_bottom) fail("no supremum for {} (no bottom element)");
  if (!has_top) fail("no infimum for {} (no top element)");

  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      Elem lub = -1, glb = -1;
      for (Elem u = 0; u < n; ++u) {
        if (l.raw_leq(x, u) && l.raw_leq(y, u)) {
          bool least = true;
          for (Elem v = 0; v < n && least; ++v)
            if (l.raw_leq(x, v) && l.raw_leq(y, v) && !l.raw_leq(u, v)) least = false;
          if (least) lub = u;
        }
        if (l.raw_leq(u, x) && l.raw_leq(u, y)) {
          bool greatest = true;
          for (Elem v = 0; v < n && greatest; ++v)
            if (l.raw_leq(v, x) && l.raw_leq(v, y) && !l.raw_leq(v, u)) greatest = false;
          if (greatest) glb = u;
        }
      }
      if (lub < 0) fail("no supremum for " + pair_set(x, y));
      if (glb < 0) fail("no infimum for " + pair_set(x, y));
    }
  return rep;
}

}  // namespace qorder
