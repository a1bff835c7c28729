#pragma once

#include <vector>

#include "ringlab/classify.hpp"

/// Definition-literal predicates. Nothing here shares code with the
/// optimized scans in classify.cpp: units, radicals and products are
/// recomputed from the tables by brute force, so agreement between the two
/// routes is evidence for both.
namespace ringlab::oracle {

bool is_unit(const FiniteRing& r, Elem a);
/// a^k in I for some 1 <= k <= |R|, by repeated multiplication.
bool in_radical(const Ideal& i, Elem a);

/// Triple / pair loops in lexicographic order; same witness convention as
/// the optimized predicates.
Verdict check(const Ideal& i, Property p);

/// True iff `witness` violates the definition of `p` for I.
bool replays(const Ideal& i, Property p, const std::vector<Elem>& witness);

/// u-ring test by enumerating every family of ideals (exponential).
bool is_u_ring_exhaustive(const RingPtr& r);

}  // namespace ringlab::oracle
