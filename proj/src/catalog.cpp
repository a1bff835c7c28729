#include "ringlab/catalog.hpp"

namespace ringlab {

RingPtr mk_f2xy_square(const Limits& limits) {
  constexpr std::size_t n = 8;
  std::vector<Elem> add(n * n), mul(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>(a ^ b);
      unsigned a0 = a & 1, b0 = b & 1;
      unsigned c0 = a0 & b0;
      unsigned c1 = ((a0 & (b >> 1)) ^ (b0 & (a >> 1))) & 1;
      unsigned c2 = ((a0 & (b >> 2)) ^ (b0 & (a >> 2))) & 1;
      mul[a * n + b] = static_cast<Elem>(c0 | (c1 << 1) | (c2 << 2));
    }
  std::vector<std::string> names = {"0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"};
  RingStructure s;
  s.kind = RingStructure::Kind::Table;
  return FiniteRing::make(std::move(add), std::move(mul), std::move(names), "table(f2xy)", s, limits);
}

std::vector<std::string> catalog_names() { return {"f2xy"}; }

RingPtr catalog_ring(std::string_view name, const Limits& limits) {
  if (name == "f2xy") return mk_f2xy_square(limits);
  throw RingError(ErrorKind::Parse, "unknown catalog ring '" + std::string(name) + "'");
}

}  // namespace ringlab
