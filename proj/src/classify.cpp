#include "ringlab/classify.hpp"

#include <bit>
#include <stdexcept>

namespace ringlab {

namespace {

/// Smallest x in pos & ~neg1 & ~neg2 & ~neg3 (null pointers are skipped).
long first_masked(const ElemSet& pos, const ElemSet* also, const ElemSet* neg1,
                  const ElemSet* neg2, const ElemSet* neg3) {
  const auto& w = pos.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint64_t x = w[i];
    if (also) x &= also->words()[i];
    if (neg1) x &= ~neg1->words()[i];
    if (neg2) x &= ~neg2->words()[i];
    if (neg3) x &= ~neg3->words()[i];
    if (x) return static_cast<long>(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }
  return -1;
}

Verdict fail(std::initializer_list<long> xs) {
  Verdict v;
  v.holds = false;
  for (auto x : xs) v.witness.push_back(static_cast<Elem>(x));
  return v;
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::Prime: return "prime";
    case Property::WeaklyPrime: return "weakly_prime";
    case Property::Primary: return "primary";
    case Property::WeaklyPrimary: return "weakly_primary";
    case Property::Semiprimary: return "semiprimary";
    case Property::TwoAbsorbing: return "two_absorbing";
    case Property::WeaklyTwoAbsorbing: return "weakly_two_absorbing";
    case Property::TwoAbsorbingPrimary: return "two_absorbing_primary";
    case Property::WeaklyTwoAbsorbingPrimary: return "weakly_two_absorbing_primary";
    case Property::OneAbsorbingPrimary: return "one_absorbing_primary";
    case Property::WeaklyOneAbsorbingPrimary: return "weakly_one_absorbing_primary";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view s) {
  for (auto p : kAllProperties)
    if (property_name(p) == s) return p;
  if (s == "1AP") return Property::OneAbsorbingPrimary;
  if (s == "weakly_1AP") return Property::WeaklyOneAbsorbingPrimary;
  if (s == "2AP" || s == "2absorbing") return Property::TwoAbsorbing;
  if (s == "weakly_2AP" || s == "weakly_2absorbing") return Property::WeaklyTwoAbsorbing;
  if (s == "2AP_primary") return Property::TwoAbsorbingPrimary;
  if (s == "weakly_2AP_primary") return Property::WeaklyTwoAbsorbingPrimary;
  return std::nullopt;
}

const std::vector<Implication>& lattice_implications() {
  using P = Property;
  static const std::vector<Implication> kImps = {
      {P::Prime, P::Primary},
      {P::Prime, P::WeaklyPrime},
      {P::Prime, P::Semiprimary},
      {P::Prime, P::TwoAbsorbing},
      {P::Primary, P::WeaklyPrimary},
      {P::Primary, P::OneAbsorbingPrimary},
      {P::Primary, P::Semiprimary},
      {P::Primary, P::TwoAbsorbingPrimary},
      {P::OneAbsorbingPrimary, P::WeaklyOneAbsorbingPrimary},
      {P::WeaklyPrime, P::WeaklyOneAbsorbingPrimary},
      {P::WeaklyPrime, P::WeaklyPrimary},
      {P::WeaklyPrimary, P::WeaklyOneAbsorbingPrimary},
      {P::WeaklyOneAbsorbingPrimary, P::WeaklyTwoAbsorbingPrimary},
      {P::TwoAbsorbing, P::WeaklyTwoAbsorbing},
      {P::TwoAbsorbing, P::TwoAbsorbingPrimary},
      {P::WeaklyTwoAbsorbing, P::WeaklyTwoAbsorbingPrimary},
      {P::TwoAbsorbingPrimary, P::WeaklyTwoAbsorbingPrimary},
  };
  return kImps;
}

std::vector<Implication> lattice_violations(const PropertyRecord& rec) {
  std::vector<Implication> out;
  for (const auto& imp : lattice_implications())
    if (rec.holds(imp.from) && !rec.holds(imp.to)) out.push_back(imp);
  return out;
}

void require_proper(const Ideal& i) {
  if (!i.is_proper())
    throw RingError(ErrorKind::ImproperIdeal, "the whole ring " + i.ring().label() +
                                                  " is not a proper ideal");
}

IdealScan::IdealScan(const Ideal& i) : ideal_(i), rad_(radical(i)) {
  require_proper(i);
  const auto& r = i.ring();
  const std::size_t n = r.order();
  mul_in_.assign(n, ElemSet(n));
  mul_rad_.assign(n, ElemSet(n));
  ann_.assign(n, ElemSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = x; c < n; ++c) {
      const Elem p = r.mul(static_cast<Elem>(x), static_cast<Elem>(c));
      if (i.contains(p)) {
        mul_in_[x].insert(c);
        mul_in_[c].insert(x);
      }
      if (rad_.contains(p)) {
        mul_rad_[x].insert(c);
        mul_rad_[c].insert(x);
      }
      if (p == r.zero()) {
        ann_[x].insert(c);
        ann_[c].insert(x);
      }
    }
}

Verdict IdealScan::prime(bool weak) const {
  const std::size_t n = ring().order();
  for (std::size_t a = 0; a < n; ++a) {
    if (ideal_.contains(static_cast<Elem>(a))) continue;
    long b = first_masked(mul_in_[a], nullptr, &ideal_.members(), weak ? &ann_[a] : nullptr,
                          nullptr);
    if (b >= 0) return fail({static_cast<long>(a), b});
  }
  return {};
}

Verdict IdealScan::primary(bool weak) const {
  const std::size_t n = ring().order();
  for (std::size_t a = 0; a < n; ++a) {
    if (ideal_.contains(static_cast<Elem>(a))) continue;
    long b = first_masked(mul_in_[a], nullptr, &rad_.members(), weak ? &ann_[a] : nullptr,
                          nullptr);
    if (b >= 0) return fail({static_cast<long>(a), b});
  }
  return {};
}

Verdict IdealScan::semiprimary() const {
  const std::size_t n = ring().order();
  for (std::size_t a = 0; a < n; ++a) {
    if (rad_.contains(static_cast<Elem>(a))) continue;
    long b = first_masked(mul_rad_[a], nullptr, &rad_.members(), nullptr, nullptr);
    if (b >= 0) return fail({static_cast<long>(a), b});
  }
  return {};
}

Verdict IdealScan::two_absorbing(bool weak) const {
  const auto& r = ring();
  const std::size_t n = r.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem p = r.mul(static_cast<Elem>(a), static_cast<Elem>(b));
      if (ideal_.contains(p)) continue;
      long c = first_masked(mul_in_[p], nullptr, &mul_in_[a], &mul_in_[b],
                            weak ? &ann_[p] : nullptr);
      if (c >= 0) return fail({static_cast<long>(a), static_cast<long>(b), c});
    }
  return {};
}

Verdict IdealScan::two_absorbing_primary(bool weak) const {
  const auto& r = ring();
  const std::size_t n = r.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem p = r.mul(static_cast<Elem>(a), static_cast<Elem>(b));
      if (ideal_.contains(p)) continue;
      long c = first_masked(mul_in_[p], nullptr, &mul_rad_[a], &mul_rad_[b],
                            weak ? &ann_[p] : nullptr);
      if (c >= 0) return fail({static_cast<long>(a), static_cast<long>(b), c});
    }
  return {};
}

Verdict IdealScan::one_absorbing_primary(bool weak) const {
  const auto& r = ring();
  const std::size_t n = r.order();
  // The conclusion depends on (a,b) only through p = ab, so the first bad c
  // is computed once per product.
  std::vector<long> bad_c(n);
  for (std::size_t p = 0; p < n; ++p)
    bad_c[p] = first_masked(mul_in_[p], &r.nonunits(), &rad_.members(),
                            weak ? &ann_[p] : nullptr, nullptr);
  for (auto a : r.nonunit_list())
    for (auto b : r.nonunit_list()) {
      const Elem p = r.mul(a, b);
      if (!ideal_.contains(p) && bad_c[p] >= 0) return fail({a, b, bad_c[p]});
    }
  return {};
}

Verdict IdealScan::check(Property p) const {
  switch (p) {
    case Property::Prime: return prime(false);
    case Property::WeaklyPrime: return prime(true);
    case Property::Primary: return primary(false);
    case Property::WeaklyPrimary: return primary(true);
    case Property::Semiprimary: return semiprimary();
    case Property::TwoAbsorbing: return two_absorbing(false);
    case Property::WeaklyTwoAbsorbing: return two_absorbing(true);
    case Property::TwoAbsorbingPrimary: return two_absorbing_primary(false);
    case Property::WeaklyTwoAbsorbingPrimary: return two_absorbing_primary(true);
    case Property::OneAbsorbingPrimary: return one_absorbing_primary(false);
    case Property::WeaklyOneAbsorbingPrimary: return one_absorbing_primary(true);
  }
  throw std::logic_error("unknown property");
}

Verdict check_property(const Ideal& i, Property p) { return IdealScan(i).check(p); }

PropertyRecord classify(const Ideal& i) {
  IdealScan scan(i);
  PropertyRecord rec{i, scan.rad(), {}};
  for (auto p : kAllProperties) rec[p] = scan.check(p);
  auto broken = lattice_violations(rec);
  if (!broken.empty())
    throw std::logic_error("property lattice broken for " + i.to_string() + " in " +
                           i.ring().label() + ": " +
                           std::string(property_name(broken.front().from)) + " => " +
                           std::string(property_name(broken.front().to)));
  return rec;
}

void for_each_triple_zero(const IdealScan& scan,
                          const std::function<bool(const TripleZero&)>& fn) {
  const auto& r = scan.ring();
  const auto& i = scan.ideal();
  for (auto a : r.nonunit_list())
    for (auto b : r.nonunit_list()) {
      const Elem p = r.mul(a, b);
      if (i.contains(p)) continue;
      // c nonunit, pc = 0, c not in sqrt(I)
      const auto& ann = scan.ann(p);
      const auto& nu = r.nonunits().words();
      const auto& rad = scan.rad().members().words();
      for (std::size_t w = 0; w < nu.size(); ++w) {
        std::uint64_t x = ann.words()[w] & nu[w] & ~rad[w];
        while (x) {
          const Elem c = static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
          if (!fn(TripleZero{a, b, c})) return;
          x &= x - 1;
        }
      }
    }
}

std::vector<TripleZero> find_triple_zeros(const Ideal& i) {
  IdealScan scan(i);
  std::vector<TripleZero> out;
  for_each_triple_zero(scan, [&](const TripleZero& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

FreeCheck is_free_triple_zero(const Ideal& i, const Ideal& i1, const Ideal& i2,
                              const Ideal& i3) {
  for (const Ideal* x : {&i, &i1, &i2, &i3}) {
    require_same_ring(i.ring(), x->ring());
    require_proper(*x);
  }
  if (!ideal_product(ideal_product(i1, i2), i3).is_subset_of(i))
    throw RingError(ErrorKind::Containment, "I1 I2 I3 is not contained in I");
  const auto& r = i.ring();
  const ElemSet rad = radical(i).members();
  const ElemSet c_ok = i3.members() - rad;  // members of a proper ideal are nonunits
  FreeCheck out;
  i1.members().for_each([&](Elem a) {
    if (!out.free) return;
    i2.members().for_each([&](Elem b) {
      if (!out.free) return;
      const Elem p = r.mul(a, b);
      if (i.contains(p)) return;
      c_ok.for_each([&](Elem c) {
        if (out.free && r.mul(p, c) == r.zero()) {
          out.free = false;
          out.first_bad = TripleZero{a, b, c};
        }
      });
    });
  });
  return out;
}

}  // namespace ringlab
