#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/elem_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// An ideal of a FiniteRing, stored as its canonical member set.
class Ideal {
 public:
  Ideal() = default;
  /// Trusted constructor: `members` must already be an ideal of `ring`.
  Ideal(RingPtr ring, ElemSet members) : ring_(std::move(ring)), members_(std::move(members)) {}
  /// Verifies zero-membership and closure; throws RingError(Malformed).
  static Ideal from_members(RingPtr ring, const std::vector<Elem>& members);

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const ElemSet& members() const { return members_; }

  bool contains(Elem a) const { return members_.contains(a); }
  std::size_t size() const { return members_.size(); }
  bool is_proper() const { return !members_.contains(ring_->one()); }
  bool is_zero() const { return members_.size() == 1; }
  bool is_whole() const { return !is_proper(); }
  bool is_subset_of(const Ideal& o) const;
  std::vector<Elem> elements() const { return members_.to_vector(); }

  /// "{a,b,...}" using element names.
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_->id() == b.ring_->id() && a.members_ == b.members_;
  }

 private:
  RingPtr ring_;
  ElemSet members_;
};

/// True iff `s` contains zero and is closed under addition and under
/// multiplication by every ring element (full scan).
bool is_ideal_set(const FiniteRing& r, const ElemSet& s);

Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);
Ideal principal_ideal(const RingPtr& r, Elem a);
Ideal ideal_generated(const RingPtr& r, const std::vector<Elem>& gens);
/// A small generating set, chosen greedily in element order.
std::vector<Elem> ideal_generators(const Ideal& i);

/// Every ideal of the ring, ordered by size and then lexicographically.
/// Throws RingError(Resource) beyond limits.max_ideals.
std::vector<Ideal> all_ideals(const RingPtr& r, const Limits& limits = {});

Ideal radical(const Ideal& i);
/// (I:J) = { a : aJ in I }.
Ideal residual(const Ideal& i, const Ideal& j);
/// (I:c) = (I:(c)).
Ideal residual(const Ideal& i, Elem c);
Ideal annihilator(const RingPtr& r, Elem x);

/// Z(R): elements r with rs = 0 for some s != 0.
ElemSet zero_divisors(const FiniteRing& r);
/// Z_I(R) = { r : rs in I for some s not in I }.
ElemSet z_relative(const Ideal& i);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// k in 1..3
Ideal ideal_power(const Ideal& a, int k);
/// x * I as a set (an ideal since it is the product (x) I).
Ideal ideal_scale(Elem x, const Ideal& i);

bool is_prime_ideal(const Ideal& i);
bool is_maximal_ideal(const Ideal& i);

Ideal nilradical(const RingPtr& r);
std::vector<Ideal> maximal_ideals(const RingPtr& r, const Limits& limits = {});
std::vector<Ideal> prime_ideals(const RingPtr& r, const Limits& limits = {});
Ideal jacobson_radical(const RingPtr& r, const Limits& limits = {});

// Ring class predicates.

bool is_field(const FiniteRing& r);
bool is_domain(const FiniteRing& r);
bool is_reduced(const FiniteRing& r);
/// Every x has y with x^2 y = x.
bool is_vnr(const FiniteRing& r);
bool is_quasilocal(const RingPtr& r, const Limits& limits = {});
/// x | y or y | x for all x, y.
bool is_chained(const FiniteRing& r);
/// For every prime P and x not in P, x divides every element of P.
bool is_divided(const RingPtr& r, const Limits& limits = {});

/// An ideal covered by a union of ideals none of which contains it.
struct UCover {
  Ideal covered;
  std::vector<Ideal> cover;
};
/// Checks every ideal I against the union of all ideals not containing I;
/// any covering family refines to that one. Returns the first failure with
/// a minimal subcover, or nullopt for a u-ring.
std::optional<UCover> u_ring_violation(const RingPtr& r, const Limits& limits = {});
inline bool is_u_ring(const RingPtr& r, const Limits& limits = {}) {
  return !u_ring_violation(r, limits).has_value();
}

/// Nonunits x such that no pair of nonunits c, d has cd = x.
ElemSet irreducible_elements(const FiniteRing& r);

/// Element names of a set, "{a,b}".
std::string format_set(const FiniteRing& r, const ElemSet& s);

}  // namespace ringlab
