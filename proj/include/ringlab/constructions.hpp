#pragma once

#include <utility>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// R/J over coset representatives (smallest index per coset) together with
/// the natural projection.
std::pair<RingPtr, RingHom> mk_quotient(const Ideal& j, const Limits& limits = {});

/// The fraction ring S^{-1}R and the canonical map a -> a/1.
///
/// S is closed under products and 1 is adjoined; 0 in the closure is
/// rejected. Over a finite ring every s in S has a power that is
/// idempotent, so a/s = a s^(k-1) / 1 and the fraction ring is R/K with
/// K = { a : ua = 0 for some u in S }.
std::pair<RingPtr, RingHom> mk_localization(const RingPtr& r, const std::vector<Elem>& s,
                                            const Limits& limits = {});

/// Multiplicative closure of `gens` with 1 adjoined.
ElemSet multiplicative_closure(const FiniteRing& r, const std::vector<Elem>& gens);

/// f(I); requires f surjective, otherwise throws RingError(Surjectivity).
Ideal hom_image_ideal(const RingHom& f, const Ideal& i);
Ideal hom_preimage_ideal(const RingHom& f, const Ideal& j);

}  // namespace ringlab
