#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ideal.hpp"

namespace ringlab {

enum class Property {
  Prime,
  WeaklyPrime,
  Primary,
  WeaklyPrimary,
  Semiprimary,
  TwoAbsorbing,
  WeaklyTwoAbsorbing,
  TwoAbsorbingPrimary,
  WeaklyTwoAbsorbingPrimary,
  OneAbsorbingPrimary,
  WeaklyOneAbsorbingPrimary,
};

inline constexpr std::array<Property, 11> kAllProperties = {
    Property::Prime,
    Property::WeaklyPrime,
    Property::Primary,
    Property::WeaklyPrimary,
    Property::Semiprimary,
    Property::TwoAbsorbing,
    Property::WeaklyTwoAbsorbing,
    Property::TwoAbsorbingPrimary,
    Property::WeaklyTwoAbsorbingPrimary,
    Property::OneAbsorbingPrimary,
    Property::WeaklyOneAbsorbingPrimary,
};

/// Stable snake_case name used in JSON and on the command line.
std::string_view property_name(Property p);
/// Accepts the stable names and the short forms "1AP", "weakly_1AP",
/// "2AP", "weakly_2AP", "2AP_primary", "weakly_2AP_primary".
std::optional<Property> parse_property(std::string_view s);

/// Outcome of one predicate. A failed predicate carries the lexicographically
/// first violating tuple: (a,b) for pair definitions, (a,b,c) for triples.
struct Verdict {
  bool holds = true;
  std::vector<Elem> witness;
};

struct PropertyRecord {
  Ideal ideal;
  Ideal rad;
  std::array<Verdict, kAllProperties.size()> verdicts;

  const Verdict& operator[](Property p) const { return verdicts[static_cast<std::size_t>(p)]; }
  Verdict& operator[](Property p) { return verdicts[static_cast<std::size_t>(p)]; }
  bool holds(Property p) const { return (*this)[p].holds; }
};

/// One implication of the property lattice, e.g. primary => 1-absorbing primary.
struct Implication {
  Property from;
  Property to;
};
const std::vector<Implication>& lattice_implications();
/// Implications broken by a record (empty for every correct record).
std::vector<Implication> lattice_violations(const PropertyRecord& rec);

/// Precomputed residual tables for one proper ideal; every optimized
/// predicate reads from here.
class IdealScan {
 public:
  explicit IdealScan(const Ideal& i);

  const Ideal& ideal() const { return ideal_; }
  const Ideal& rad() const { return rad_; }
  const FiniteRing& ring() const { return ideal_.ring(); }
  /// (I:x) as a set.
  const ElemSet& mul_in(Elem x) const { return mul_in_[x]; }
  /// (sqrt(I):x) as a set.
  const ElemSet& mul_rad(Elem x) const { return mul_rad_[x]; }
  /// ann(x).
  const ElemSet& ann(Elem x) const { return ann_[x]; }

  Verdict prime(bool weak) const;
  Verdict primary(bool weak) const;
  Verdict semiprimary() const;
  Verdict two_absorbing(bool weak) const;
  Verdict two_absorbing_primary(bool weak) const;
  Verdict one_absorbing_primary(bool weak) const;

  Verdict check(Property p) const;

 private:
  Ideal ideal_;
  Ideal rad_;
  std::vector<ElemSet> mul_in_, mul_rad_, ann_;
};

/// Throws RingError(ImproperIdeal) for I = R.
void require_proper(const Ideal& i);

Verdict check_property(const Ideal& i, Property p);
inline Verdict is_weakly_one_absorbing_primary(const Ideal& i) {
  return check_property(i, Property::WeaklyOneAbsorbingPrimary);
}
inline Verdict is_one_absorbing_primary(const Ideal& i) {
  return check_property(i, Property::OneAbsorbingPrimary);
}

/// Every predicate with witnesses; the lattice is checked before returning
/// and a broken implication throws std::logic_error.
PropertyRecord classify(const Ideal& i);

/// Nonunit triple (a,b,c) with abc = 0, ab not in I, c not in sqrt(I).
struct TripleZero {
  Elem a, b, c;
  friend bool operator==(const TripleZero&, const TripleZero&) = default;
};

/// Calls `fn` for every 1-triple-zero of I in lexicographic order; stops
/// early when `fn` returns false.
void for_each_triple_zero(const IdealScan& scan, const std::function<bool(const TripleZero&)>& fn);
std::vector<TripleZero> find_triple_zeros(const Ideal& i);

struct FreeCheck {
  bool free = true;
  std::optional<TripleZero> first_bad;
};
/// I is free of 1-triple-zeros with respect to I1 I2 I3: no (a,b,c) in
/// I1 x I2 x I3 is a 1-triple-zero of I. Requires proper ideals with
/// I1 I2 I3 contained in I (RingError(Containment) otherwise).
FreeCheck is_free_triple_zero(const Ideal& i, const Ideal& i1, const Ideal& i2, const Ideal& i3);

}  // namespace ringlab
