#include "ringlab/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace ringlab {

namespace {

/// Principal ideal Ra as a set.
ElemSet principal_set(const FiniteRing& r, Elem a) {
  ElemSet s(r.order());
  for (std::size_t x = 0; x < r.order(); ++x) s.insert(r.mul(static_cast<Elem>(x), a));
  return s;
}

/// I + J for ideal sets, built as a union of cosets of I.
ElemSet sum_sets(const FiniteRing& r, const ElemSet& i, const ElemSet& j) {
  ElemSet out = i;
  const auto i_elems = i.to_vector();
  j.for_each([&](Elem x) {
    if (out.contains(x)) return;
    for (auto e : i_elems) out.insert(r.add(e, x));
  });
  return out;
}

void require_same(const Ideal& a, const Ideal& b) { require_same_ring(a.ring(), b.ring()); }

}  // namespace

bool is_ideal_set(const FiniteRing& r, const ElemSet& s) {
  if (!s.contains(r.zero())) return false;
  bool ok = true;
  s.for_each([&](Elem a) {
    if (!ok) return;
    s.for_each([&](Elem b) {
      if (ok && !s.contains(r.add(a, b))) ok = false;
    });
    for (std::size_t x = 0; x < r.order() && ok; ++x)
      if (!s.contains(r.mul(static_cast<Elem>(x), a))) ok = false;
  });
  return ok;
}

Ideal Ideal::from_members(RingPtr ring, const std::vector<Elem>& members) {
  ElemSet s(ring->order());
  for (auto m : members) {
    if (!ring->valid(m)) throw RingError(ErrorKind::Malformed, "ideal member out of range");
    s.insert(m);
  }
  if (!is_ideal_set(*ring, s))
    throw RingError(ErrorKind::Malformed, "set is not an ideal of " + ring->label());
  return Ideal(std::move(ring), std::move(s));
}

bool Ideal::is_subset_of(const Ideal& o) const {
  require_same(*this, o);
  return members_.is_subset_of(o.members_);
}

std::string format_set(const FiniteRing& r, const ElemSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem a) {
    if (!first) out += ",";
    first = false;
    out += r.name(a);
  });
  return out + "}";
}

std::string Ideal::to_string() const { return format_set(*ring_, members_); }

Ideal zero_ideal(const RingPtr& r) {
  ElemSet s(r->order());
  s.insert(r->zero());
  return Ideal(r, std::move(s));
}

Ideal unit_ideal(const RingPtr& r) { return Ideal(r, ElemSet::full(r->order())); }

Ideal principal_ideal(const RingPtr& r, Elem a) { return Ideal(r, principal_set(*r, a)); }

Ideal ideal_generated(const RingPtr& r, const std::vector<Elem>& gens) {
  ElemSet cur(r->order());
  cur.insert(r->zero());
  for (auto g : gens) {
    if (!r->valid(g)) throw RingError(ErrorKind::Malformed, "generator out of range");
    if (!cur.contains(g)) cur = sum_sets(*r, cur, principal_set(*r, g));
  }
  return Ideal(r, std::move(cur));
}

std::vector<Elem> ideal_generators(const Ideal& i) {
  const auto& r = i.ring();
  std::vector<Elem> gens;
  ElemSet cur(r.order());
  cur.insert(r.zero());
  i.members().for_each([&](Elem a) {
    if (cur.contains(a)) return;
    cur = sum_sets(r, cur, principal_set(r, a));
    gens.push_back(a);
  });
  return gens;
}

std::vector<Ideal> all_ideals(const RingPtr& r, const Limits& limits) {
  std::unordered_map<ElemSet, bool, ElemSetHash> seen;
  std::vector<ElemSet> principals;
  for (std::size_t a = 0; a < r->order(); ++a) {
    auto p = principal_set(*r, static_cast<Elem>(a));
    if (seen.emplace(p, true).second) principals.push_back(std::move(p));
  }
  // Every ideal is a finite sum of principal ideals, so closing the
  // principal ideals under "+ principal" reaches all of them.
  auto too_many = [&] {
    return RingError(ErrorKind::Resource, r->label() + " has more than " +
                                              std::to_string(limits.max_ideals) + " ideals");
  };
  if (principals.size() > limits.max_ideals) throw too_many();
  std::vector<ElemSet> found = principals;
  std::deque<std::size_t> work;
  for (std::size_t k = 0; k < found.size(); ++k) work.push_back(k);
  while (!work.empty()) {
    const ElemSet cur = found[work.front()];
    work.pop_front();
    for (const auto& p : principals) {
      if (p.is_subset_of(cur)) continue;
      auto s = sum_sets(*r, cur, p);
      if (seen.emplace(s, true).second) {
        found.push_back(std::move(s));
        if (found.size() > limits.max_ideals) throw too_many();
        work.push_back(found.size() - 1);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const ElemSet& a, const ElemSet& b) {
    return canonical_less(a, b);
  });
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) out.emplace_back(r, std::move(s));
  return out;
}

Ideal radical(const Ideal& i) {
  const auto& r = i.ring();
  ElemSet s(r.order());
  for (std::size_t a = 0; a < r.order(); ++a)
    if (i.contains(r.stable_power(static_cast<Elem>(a)))) s.insert(a);
  return Ideal(i.ring_ptr(), std::move(s));
}

Ideal residual(const Ideal& i, Elem c) {
  const auto& r = i.ring();
  ElemSet s(r.order());
  for (std::size_t a = 0; a < r.order(); ++a)
    if (i.contains(r.mul(static_cast<Elem>(a), c))) s.insert(a);
  return Ideal(i.ring_ptr(), std::move(s));
}

Ideal residual(const Ideal& i, const Ideal& j) {
  require_same(i, j);
  ElemSet s = ElemSet::full(i.ring().order());
  for (auto g : ideal_generators(j)) s &= residual(i, g).members();
  return Ideal(i.ring_ptr(), std::move(s));
}

Ideal annihilator(const RingPtr& r, Elem x) { return residual(zero_ideal(r), x); }

ElemSet zero_divisors(const FiniteRing& r) {
  ElemSet z(r.order());
  for (std::size_t a = 0; a < r.order(); ++a)
    for (std::size_t b = 0; b < r.order(); ++b)
      if (b != r.zero() && r.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == r.zero()) {
        z.insert(a);
        break;
      }
  return z;
}

ElemSet z_relative(const Ideal& i) {
  const auto& r = i.ring();
  ElemSet z(r.order());
  for (std::size_t a = 0; a < r.order(); ++a)
    for (std::size_t s = 0; s < r.order(); ++s)
      if (!i.contains(static_cast<Elem>(s)) &&
          i.contains(r.mul(static_cast<Elem>(a), static_cast<Elem>(s)))) {
        z.insert(a);
        break;
      }
  return z;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  return Ideal(a.ring_ptr(), sum_sets(a.ring(), a.members(), b.members()));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  return Ideal(a.ring_ptr(), a.members() & b.members());
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  const auto& r = a.ring();
  std::vector<Elem> gens;
  const auto ga = ideal_generators(a), gb = ideal_generators(b);
  for (auto x : ga)
    for (auto y : gb) gens.push_back(r.mul(x, y));
  return ideal_generated(a.ring_ptr(), gens);
}

Ideal ideal_power(const Ideal& a, int k) {
  if (k < 1 || k > 3) throw RingError(ErrorKind::Malformed, "ideal_power supports k in 1..3");
  Ideal out = a;
  for (int i = 1; i < k; ++i) out = ideal_product(out, a);
  return out;
}

Ideal ideal_scale(Elem x, const Ideal& i) {
  const auto& r = i.ring();
  ElemSet s(r.order());
  i.members().for_each([&](Elem m) { s.insert(r.mul(x, m)); });
  return Ideal(i.ring_ptr(), std::move(s));
}

bool is_prime_ideal(const Ideal& i) {
  if (!i.is_proper()) return false;
  const auto& r = i.ring();
  const ElemSet out = ElemSet::full(r.order()) - i.members();
  bool prime = true;
  out.for_each([&](Elem a) {
    if (!prime) return;
    out.for_each([&](Elem b) {
      if (prime && i.contains(r.mul(a, b))) prime = false;
    });
  });
  return prime;
}

bool is_maximal_ideal(const Ideal& i) {
  // Maximal iff R/I is a field: every a outside I has b with ab - 1 in I.
  if (!i.is_proper()) return false;
  const auto& r = i.ring();
  for (std::size_t a = 0; a < r.order(); ++a) {
    if (i.contains(static_cast<Elem>(a))) continue;
    bool invertible = false;
    for (std::size_t b = 0; b < r.order() && !invertible; ++b)
      invertible = i.contains(r.sub(r.mul(static_cast<Elem>(a), static_cast<Elem>(b)), r.one()));
    if (!invertible) return false;
  }
  return true;
}

Ideal nilradical(const RingPtr& r) { return radical(zero_ideal(r)); }

std::vector<Ideal> maximal_ideals(const RingPtr& r, const Limits& limits) {
  std::vector<Ideal> out;
  for (auto& i : all_ideals(r, limits))
    if (is_maximal_ideal(i)) out.push_back(std::move(i));
  return out;
}

std::vector<Ideal> prime_ideals(const RingPtr& r, const Limits& limits) {
  std::vector<Ideal> out;
  for (auto& i : all_ideals(r, limits))
    if (is_prime_ideal(i)) out.push_back(std::move(i));
  return out;
}

Ideal jacobson_radical(const RingPtr& r, const Limits& limits) {
  Ideal j = unit_ideal(r);
  for (const auto& m : maximal_ideals(r, limits)) j = ideal_intersection(j, m);
  return j;
}

bool is_field(const FiniteRing& r) { return r.units().size() + 1 == r.order(); }

bool is_domain(const FiniteRing& r) {
  // A finite domain is a field; the zero-divisor scan is kept literal.
  return zero_divisors(r).size() == 1;
}

bool is_reduced(const FiniteRing& r) { return r.nilpotents().size() == 1; }

bool is_vnr(const FiniteRing& r) {
  for (std::size_t x = 0; x < r.order(); ++x) {
    const Elem e = static_cast<Elem>(x), x2 = r.mul(e, e);
    bool found = false;
    for (std::size_t y = 0; y < r.order() && !found; ++y)
      found = r.mul(x2, static_cast<Elem>(y)) == e;
    if (!found) return false;
  }
  return true;
}

bool is_quasilocal(const RingPtr& r, const Limits& limits) {
  return maximal_ideals(r, limits).size() == 1;
}

bool is_chained(const FiniteRing& r) {
  std::vector<ElemSet> p;
  for (std::size_t a = 0; a < r.order(); ++a) p.push_back(principal_set(r, static_cast<Elem>(a)));
  // x | y iff y in (x)
  for (std::size_t x = 0; x < r.order(); ++x)
    for (std::size_t y = x + 1; y < r.order(); ++y)
      if (!p[x].contains(y) && !p[y].contains(x)) return false;
  return true;
}

bool is_divided(const RingPtr& r, const Limits& limits) {
  std::vector<ElemSet> p;
  for (std::size_t a = 0; a < r->order(); ++a)
    p.push_back(principal_set(*r, static_cast<Elem>(a)));
  for (const auto& prime : prime_ideals(r, limits)) {
    for (std::size_t x = 0; x < r->order(); ++x) {
      if (prime.contains(static_cast<Elem>(x))) continue;
      if (!prime.members().is_subset_of(p[x])) return false;
    }
  }
  return true;
}

std::optional<UCover> u_ring_violation(const RingPtr& r, const Limits& limits) {
  const auto ideals = all_ideals(r, limits);
  for (const auto& i : ideals) {
    std::vector<std::size_t> family;
    ElemSet uni(r->order());
    for (std::size_t k = 0; k < ideals.size(); ++k)
      if (!i.members().is_subset_of(ideals[k].members())) {
        family.push_back(k);
        uni |= ideals[k].members();
      }
    if (!i.members().is_subset_of(uni)) continue;
    // Drop members not needed for the cover.
    std::vector<bool> keep(family.size(), true);
    for (std::size_t f = 0; f < family.size(); ++f) {
      ElemSet rest(r->order());
      for (std::size_t g = 0; g < family.size(); ++g)
        if (g != f && keep[g]) rest |= ideals[family[g]].members();
      if (i.members().is_subset_of(rest)) keep[f] = false;
    }
    UCover w{i, {}};
    for (std::size_t f = 0; f < family.size(); ++f)
      if (keep[f]) w.cover.push_back(ideals[family[f]]);
    return w;
  }
  return std::nullopt;
}

ElemSet irreducible_elements(const FiniteRing& r) {
  ElemSet products(r.order());
  for (auto c : r.nonunit_list())
    for (auto d : r.nonunit_list()) products.insert(r.mul(c, d));
  return r.nonunits() - products;
}

}  // namespace ringlab
