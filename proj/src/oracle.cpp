#include "ringlab/oracle.hpp"

#include <stdexcept>

namespace ringlab::oracle {

bool is_unit(const FiniteRing& r, Elem a) {
  for (std::size_t v = 0; v < r.order(); ++v)
    if (r.mul(a, static_cast<Elem>(v)) == r.one()) return true;
  return false;
}

bool in_radical(const Ideal& i, Elem a) {
  const auto& r = i.ring();
  Elem x = a;
  for (std::size_t k = 1; k <= r.order(); ++k) {
    if (i.contains(x)) return true;
    x = r.mul(x, a);
  }
  return false;
}

namespace {

struct Ctx {
  const Ideal& i;
  const FiniteRing& r;
  std::vector<bool> unit, rad, rad_in_rad;
  Elem zero;

  explicit Ctx(const Ideal& ideal) : i(ideal), r(ideal.ring()), zero(ideal.ring().zero()) {
    for (std::size_t a = 0; a < r.order(); ++a) {
      unit.push_back(is_unit(r, static_cast<Elem>(a)));
      rad.push_back(in_radical(i, static_cast<Elem>(a)));
    }
  }
  bool in(Elem x) const { return i.contains(x); }
  Elem m(Elem a, Elem b) const { return r.mul(a, b); }
  Elem m(Elem a, Elem b, Elem c) const { return r.mul(r.mul(a, b), c); }
};

/// Does the tuple violate the definition of p?
bool violates(const Ctx& c, Property p, const std::vector<Elem>& w) {
  using P = Property;
  auto pair = [&](bool weak, bool use_rad) {
    Elem a = w[0], b = w[1], ab = c.m(a, b);
    if (!c.in(ab)) return false;
    if (weak && ab == c.zero) return false;
    return !c.in(a) && !(use_rad ? c.rad[b] : c.in(b));
  };
  auto two = [&](bool weak, bool primary_form) {
    Elem a = w[0], b = w[1], x = w[2], abc = c.m(a, b, x);
    if (!c.in(abc) || (weak && abc == c.zero)) return false;
    if (c.in(c.m(a, b))) return false;
    Elem bc = c.m(b, x), ac = c.m(a, x);
    if (primary_form) return !c.rad[bc] && !c.rad[ac];
    return !c.in(bc) && !c.in(ac);
  };
  auto one = [&](bool weak) {
    Elem a = w[0], b = w[1], x = w[2];
    if (c.unit[a] || c.unit[b] || c.unit[x]) return false;
    Elem abc = c.m(a, b, x);
    if (!c.in(abc) || (weak && abc == c.zero)) return false;
    return !c.in(c.m(a, b)) && !c.rad[x];
  };
  switch (p) {
    case P::Prime: return w.size() == 2 && pair(false, false);
    case P::WeaklyPrime: return w.size() == 2 && pair(true, false);
    case P::Primary: return w.size() == 2 && pair(false, true);
    case P::WeaklyPrimary: return w.size() == 2 && pair(true, true);
    case P::Semiprimary: {
      if (w.size() != 2) return false;
      Elem ab = c.m(w[0], w[1]);
      return c.rad[ab] && !c.rad[w[0]] && !c.rad[w[1]];
    }
    case P::TwoAbsorbing: return w.size() == 3 && two(false, false);
    case P::WeaklyTwoAbsorbing: return w.size() == 3 && two(true, false);
    case P::TwoAbsorbingPrimary: return w.size() == 3 && two(false, true);
    case P::WeaklyTwoAbsorbingPrimary: return w.size() == 3 && two(true, true);
    case P::OneAbsorbingPrimary: return w.size() == 3 && one(false);
    case P::WeaklyOneAbsorbingPrimary: return w.size() == 3 && one(true);
  }
  return false;
}

bool is_pair_property(Property p) {
  switch (p) {
    case Property::Prime:
    case Property::WeaklyPrime:
    case Property::Primary:
    case Property::WeaklyPrimary:
    case Property::Semiprimary: return true;
    default: return false;
  }
}

}  // namespace

Verdict check(const Ideal& i, Property p) {
  require_proper(i);
  Ctx c(i);
  const std::size_t n = c.r.order();
  std::vector<Elem> w;
  if (is_pair_property(p)) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        w = {static_cast<Elem>(a), static_cast<Elem>(b)};
        if (violates(c, p, w)) return {false, w};
      }
    return {};
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x) {
        w = {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(x)};
        if (violates(c, p, w)) return {false, w};
      }
  return {};
}

bool replays(const Ideal& i, Property p, const std::vector<Elem>& witness) {
  for (auto e : witness)
    if (!i.ring().valid(e)) return false;
  Ctx c(i);
  return violates(c, p, witness);
}

bool is_u_ring_exhaustive(const RingPtr& r) {
  const auto ideals = all_ideals(r);
  const std::size_t n = ideals.size();
  if (n > 20) throw RingError(ErrorKind::Resource, "too many ideals for subfamily enumeration");
  for (const auto& target : ideals)
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      ElemSet uni(r->order());
      bool member_contains = false;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) {
          uni |= ideals[k].members();
          // plain loop: membership by element, not by set inclusion helper
          bool all_in = true;
          target.members().for_each([&](Elem e) { all_in = all_in && ideals[k].contains(e); });
          member_contains = member_contains || all_in;
        }
      bool covered = true;
      target.members().for_each([&](Elem e) { covered = covered && uni.contains(e); });
      if (covered && !member_contains) return false;
    }
  return true;
}

}  // namespace ringlab::oracle
