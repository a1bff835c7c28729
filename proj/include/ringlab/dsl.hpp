#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Element literal: an integer, a bare element name such as "x+y", or a
/// parenthesized tuple of literals.
struct ElemLit {
  enum class Kind { Int, Name, Tuple };
  Kind kind = Kind::Int;
  long value = 0;
  std::string name;
  std::vector<ElemLit> parts;
  std::size_t pos = 0;  // offset in the source text, for diagnostics

  friend bool operator==(const ElemLit& a, const ElemLit& b) {
    return a.kind == b.kind && a.value == b.value && a.name == b.name && a.parts == b.parts;
  }
};

/// Ideal syntax: one literal. A tuple that is not itself an element of the
/// target ring is read as a generator list, so "(4)" and "((1,0),(0,2))"
/// both work.
struct IdealExpr {
  ElemLit gens;
  friend bool operator==(const IdealExpr&, const IdealExpr&) = default;
};

struct RingExpr {
  enum class Kind { Zn, Prod, Quot, Idealize, Loc, Table };
  Kind kind = Kind::Zn;
  unsigned n = 0, d = 0;
  std::vector<RingExpr> args;  // Prod factors; Quot / Loc base ring
  IdealExpr ideal;             // Quot
  std::vector<ElemLit> elems;  // Loc
  std::string path;            // Table: catalog name or file path

  friend bool operator==(const RingExpr& a, const RingExpr& b) {
    return a.kind == b.kind && a.n == b.n && a.d == b.d && a.args == b.args &&
           a.ideal == b.ideal && a.elems == b.elems && a.path == b.path;
  }
};

/// Throws ParseError with the offending offset.
RingExpr parse_ring(std::string_view text);
IdealExpr parse_ideal(std::string_view text);
ElemLit parse_elem(std::string_view text);

std::string to_string(const RingExpr& e);
std::string to_string(const IdealExpr& e);
std::string to_string(const ElemLit& e);

/// Builds the ring. table(name) resolves catalog names first, then files.
RingPtr build_ring(const RingExpr& e, const Limits& limits = {});

/// Element of `r` named by `lit`. Quotient and localization rings accept
/// any literal of the parent ring. 0 and 1 always denote zero and one.
/// Throws ParseError for literals that name no element.
Elem resolve_elem(const RingPtr& r, const ElemLit& lit);
Ideal resolve_ideal(const RingPtr& r, const IdealExpr& e);

/// Ideal syntax for an ideal, from its generators.
IdealExpr ideal_expr_of(const Ideal& i);

}  // namespace ringlab
