#include "ringlab/constructions.hpp"

namespace ringlab {

namespace {

std::string ideal_label(const Ideal& j) {
  auto gens = ideal_generators(j);
  std::string s = "(";
  if (gens.empty()) s += "0";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) s += ",";
    s += j.ring().name(gens[k]);
  }
  return s + ")";
}

/// Builds R/K for an ideal K, naming classes by their smallest representative.
std::pair<RingPtr, RingHom> quotient_by(const RingPtr& r, const ElemSet& k, std::string label,
                                        RingStructure::Kind kind, const std::string& suffix,
                                        Limits limits) {
  const std::size_t n = r->order();
  constexpr Elem kUnassigned = 0xFFFF;
  std::vector<Elem> cls(n, kUnassigned);
  std::vector<Elem> reps;
  const auto k_elems = k.to_vector();
  for (std::size_t a = 0; a < n; ++a) {
    if (cls[a] != kUnassigned) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    for (auto x : k_elems) cls[r->add(static_cast<Elem>(a), x)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      add[x * m + y] = cls[r->add(reps[x], reps[y])];
      mul[x * m + y] = cls[r->mul(reps[x], reps[y])];
    }
  std::vector<std::string> names(m);
  for (std::size_t x = 0; x < m; ++x) names[x] = r->name(reps[x]) + suffix;

  RingStructure s;
  s.kind = kind;
  s.parent = r;
  s.parent_map = cls;
  // Tables of a quotient of a valid ring are valid.
  limits.validate = false;
  auto q = FiniteRing::make(std::move(add), std::move(mul), std::move(names), std::move(label),
                            std::move(s), limits);
  return {q, RingHom{r, q, std::move(cls)}};
}

}  // namespace

std::pair<RingPtr, RingHom> mk_quotient(const Ideal& j, const Limits& limits) {
  if (!j.is_proper())
    throw RingError(ErrorKind::ImproperIdeal, "quotient by the whole ring is the zero ring");
  const auto& r = j.ring_ptr();
  return quotient_by(r, j.members(), "quot(" + r->label() + "," + ideal_label(j) + ")",
                     RingStructure::Kind::Quotient, "", limits);
}

ElemSet multiplicative_closure(const FiniteRing& r, const std::vector<Elem>& gens) {
  ElemSet s(r.order());
  s.insert(r.one());
  std::vector<Elem> frontier{r.one()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (auto x : frontier)
      for (auto g : gens) {
        Elem y = r.mul(x, g);
        if (!s.contains(y)) {
          s.insert(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return s;
}

std::pair<RingPtr, RingHom> mk_localization(const RingPtr& r, const std::vector<Elem>& gens,
                                            const Limits& limits) {
  for (auto g : gens)
    if (!r->valid(g)) throw RingError(ErrorKind::Malformed, "localization element out of range");
  const ElemSet s = multiplicative_closure(*r, gens);
  if (s.contains(r->zero()))
    throw RingError(ErrorKind::DegenerateLocalization,
                    "0 lies in the multiplicative closure; the fraction ring would be zero");
  ElemSet kernel(r->order());
  for (std::size_t a = 0; a < r->order(); ++a) {
    bool killed = false;
    s.for_each([&](Elem u) {
      if (!killed && r->mul(u, static_cast<Elem>(a)) == r->zero()) killed = true;
    });
    if (killed) kernel.insert(a);
  }
  std::string label = "loc(" + r->label() + ",{";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) label += ",";
    label += r->name(gens[k]);
  }
  label += "})";
  return quotient_by(r, kernel, std::move(label), RingStructure::Kind::Localization, "/1",
                     limits);
}

Ideal hom_image_ideal(const RingHom& f, const Ideal& i) {
  require_same_ring(*f.domain, i.ring());
  if (!f.surjective())
    throw RingError(ErrorKind::Surjectivity,
                    "image of an ideal is only an ideal under a surjective map");
  ElemSet s(f.codomain->order());
  i.members().for_each([&](Elem a) { s.insert(f(a)); });
  return Ideal(f.codomain, std::move(s));
}

Ideal hom_preimage_ideal(const RingHom& f, const Ideal& j) {
  require_same_ring(*f.codomain, j.ring());
  ElemSet s(f.domain->order());
  for (std::size_t a = 0; a < f.domain->order(); ++a)
    if (j.contains(f(static_cast<Elem>(a)))) s.insert(a);
  return Ideal(f.domain, std::move(s));
}

}  // namespace ringlab
