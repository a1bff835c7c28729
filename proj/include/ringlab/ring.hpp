#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/elem_set.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Construction bounds shared by every ring constructor.
struct Limits {
  std::size_t max_order = 512;
  std::size_t max_ideals = 4096;
  /// Run the full cubic axiom scan on construction. Internal callers that
  /// derive rings from already validated ones may switch it off.
  bool validate = true;
};

/// Hard ceiling imposed by the 16-bit element index.
inline constexpr std::size_t kHardMaxOrder = 65535;

/// How a ring was built. Products keep their factors so that ideals can be
/// split into componentwise ideals; quotients and localizations keep the
/// parent and the canonical map.
struct RingStructure {
  enum class Kind { Zn, Product, Idealization, Quotient, Localization, Table };
  Kind kind = Kind::Table;
  unsigned n = 0;                // Zn / Idealization
  unsigned d = 0;                // Idealization module generator
  std::vector<RingPtr> factors;  // Product, most significant first
  RingPtr parent;                // Quotient / Localization
  std::vector<Elem> parent_map;  // parent element -> element of this ring
};

/// A finite commutative ring with 1 != 0, stored as Cayley tables.
///
/// Immutable after construction; the unit set, nilpotents and stable powers
/// are computed eagerly so that shared instances can be scanned from several
/// threads.
class FiniteRing {
 public:
  /// Validates the tables (see check_ring_axioms) and builds the caches.
  static RingPtr make(std::vector<Elem> add, std::vector<Elem> mul,
                      std::vector<std::string> names, std::string label,
                      RingStructure structure = {}, const Limits& limits = {});

  std::size_t order() const { return n_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  std::uint64_t id() const { return id_; }

  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t k) const;
  /// a^|R|. Lies on the cycle of a's power sequence, so a power of `a` lies
  /// in an ideal I iff stable_power(a) does.
  Elem stable_power(Elem a) const { return stable_pow_[a]; }

  bool is_unit(Elem a) const { return units_.contains(a); }
  const ElemSet& units() const { return units_; }
  const std::vector<Elem>& nonunit_list() const { return nonunits_; }
  const ElemSet& nonunits() const { return nonunit_set_; }
  const ElemSet& nilpotents() const { return nilpotents_; }

  const std::string& name(Elem a) const { return names_[a]; }
  std::optional<Elem> find_name(const std::string& s) const;
  const std::string& label() const { return label_; }
  const RingStructure& structure() const { return structure_; }

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

  /// Product rings only: component indices of `a`, most significant first.
  std::vector<Elem> decode(Elem a) const;
  Elem encode(const std::vector<Elem>& parts) const;

  bool valid(std::size_t a) const { return a < n_; }

 private:
  FiniteRing() = default;

  std::size_t n_ = 0;
  Elem zero_ = 0, one_ = 0;
  std::uint64_t id_ = 0;
  std::vector<Elem> add_, mul_, neg_, stable_pow_;
  ElemSet units_, nonunit_set_, nilpotents_;
  std::vector<Elem> nonunits_;
  std::vector<std::string> names_;
  std::string label_;
  RingStructure structure_;
};

/// First violated axiom of a candidate pair of tables, if any.
struct AxiomViolation {
  std::string axiom;
  std::vector<Elem> witness;
};
std::optional<AxiomViolation> check_ring_axioms(std::size_t order,
                                                const std::vector<Elem>& add,
                                                const std::vector<Elem>& mul);

/// Throws RingError(RingMismatch) unless both rings are the same object.
void require_same_ring(const FiniteRing& a, const FiniteRing& b);

// Constructors. Each one returns a fully validated ring.

RingPtr mk_zn(unsigned n, const Limits& limits = {});
RingPtr mk_product(const std::vector<RingPtr>& factors, const Limits& limits = {});
/// Z_n (+) (d): pairs (a, m) with m a multiple of d.
RingPtr mk_idealization(unsigned n, unsigned d, const Limits& limits = {});
/// Tables given explicitly; names default to "0".."n-1".
RingPtr mk_table(const std::vector<std::vector<unsigned>>& add,
                 const std::vector<std::vector<unsigned>>& mul,
                 std::string label = "table", const Limits& limits = {});

/// A unital ring homomorphism given by its element map.
struct RingHom {
  RingPtr domain;
  RingPtr codomain;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  bool injective() const;
  bool surjective() const;
  /// Maps every nonunit of the domain to a nonunit of the codomain.
  bool preserves_nonunits() const;
  ElemSet kernel() const;
};

struct HomCheck {
  bool ok = true;
  std::string law;  // empty when ok
  std::vector<Elem> witness;
};
HomCheck hom_check(const RingHom& f);

/// Parses a table ring from the plain-text format: the order, then the n*n
/// addition table row by row, then the n*n multiplication table.
RingPtr parse_table_ring(const std::string& text, std::string label = "table",
                         const Limits& limits = {});
std::string format_table_ring(const FiniteRing& r);

}  // namespace ringlab
