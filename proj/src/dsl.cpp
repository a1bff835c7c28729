#include "ringlab/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ringlab/catalog.hpp"
#include "ringlab/constructions.hpp"

namespace ringlab {

namespace {

bool is_token_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' &&
         c != '{' && c != '}';
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RingExpr ring() {
    skip();
    const std::size_t start = i_;
    std::string word = token();
    if (word.empty()) fail(start, "expected a ring expression");
    RingExpr e;
    if (word.size() > 1 && word[0] == 'Z' && all_digits(word.substr(1))) {
      e.kind = RingExpr::Kind::Zn;
      e.n = to_uint(word.substr(1), start + 1);
      return e;
    }
    if (word == "prod") {
      e.kind = RingExpr::Kind::Prod;
      expect('(');
      e.args.push_back(ring());
      while (accept(',')) e.args.push_back(ring());
      expect(')');
      if (e.args.size() < 2) fail(start, "prod needs at least two factors");
      return e;
    }
    if (word == "quot") {
      e.kind = RingExpr::Kind::Quot;
      expect('(');
      e.args.push_back(ring());
      expect(',');
      e.ideal.gens = elem();
      expect(')');
      return e;
    }
    if (word == "idealize") {
      e.kind = RingExpr::Kind::Idealize;
      expect('(');
      e.n = number();
      expect(',');
      e.d = number();
      expect(')');
      return e;
    }
    if (word == "loc") {
      e.kind = RingExpr::Kind::Loc;
      expect('(');
      e.args.push_back(ring());
      expect(',');
      expect('{');
      e.elems.push_back(elem());
      while (accept(',')) e.elems.push_back(elem());
      expect('}');
      expect(')');
      return e;
    }
    if (word == "table") {
      e.kind = RingExpr::Kind::Table;
      expect('(');
      skip();
      const std::size_t at = i_;
      e.path = token();
      if (e.path.empty()) fail(at, "expected a catalog name or file path");
      expect(')');
      return e;
    }
    fail(start, "unknown constructor '" + word + "'");
  }

  ElemLit elem() {
    skip();
    ElemLit lit;
    lit.pos = i_;
    if (accept('(')) {
      lit.kind = ElemLit::Kind::Tuple;
      lit.parts.push_back(elem());
      while (accept(',')) lit.parts.push_back(elem());
      expect(')');
      return lit;
    }
    std::string word = token();
    if (word.empty()) fail(lit.pos, "expected an element literal");
    std::string_view digits = word;
    if (digits.front() == '-') digits.remove_prefix(1);
    if (!digits.empty() && all_digits(digits)) {
      lit.kind = ElemLit::Kind::Int;
      try {
        lit.value = std::stol(word);
      } catch (const std::exception&) {
        fail(lit.pos, "integer literal out of range");
      }
    } else {
      lit.kind = ElemLit::Kind::Name;
      lit.name = word;
    }
    return lit;
  }

  void finish() {
    skip();
    if (i_ != s_.size()) fail(i_, "unexpected trailing text");
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) { throw ParseError(at, msg); }

  static bool all_digits(std::string_view w) {
    if (w.empty()) return false;
    for (char c : w)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }

  unsigned to_uint(std::string_view w, std::size_t at) {
    if (w.size() > 9) fail(at, "number too large");
    return static_cast<unsigned>(std::stoul(std::string(w)));
  }

  unsigned number() {
    skip();
    const std::size_t at = i_;
    std::string w = token();
    if (!all_digits(w)) fail(at, "expected a non-negative integer");
    return to_uint(w, at);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  std::string token() {
    const std::size_t start = i_;
    while (i_ < s_.size() && is_token_char(s_[i_])) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(i_, std::string("expected '") + c + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingError(ErrorKind::Malformed, "cannot read table file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Literal for element `e`, derived from its display name.
ElemLit literal_of(const RingPtr& r, Elem e) {
  const auto& st = r->structure();
  if (st.kind == RingStructure::Kind::Quotient || st.kind == RingStructure::Kind::Localization) {
    for (std::size_t a = 0; a < st.parent->order(); ++a)
      if (st.parent_map[a] == e) return literal_of(st.parent, static_cast<Elem>(a));
  }
  return parse_elem(r->name(e));
}

}  // namespace

RingExpr parse_ring(std::string_view text) {
  Parser p(text);
  auto e = p.ring();
  p.finish();
  return e;
}

ElemLit parse_elem(std::string_view text) {
  Parser p(text);
  auto e = p.elem();
  p.finish();
  return e;
}

IdealExpr parse_ideal(std::string_view text) { return IdealExpr{parse_elem(text)}; }

std::string to_string(const ElemLit& e) {
  switch (e.kind) {
    case ElemLit::Kind::Int: return std::to_string(e.value);
    case ElemLit::Kind::Name: return e.name;
    case ElemLit::Kind::Tuple: {
      std::string s = "(";
      for (std::size_t k = 0; k < e.parts.size(); ++k) s += (k ? "," : "") + to_string(e.parts[k]);
      return s + ")";
    }
  }
  return {};
}

std::string to_string(const IdealExpr& e) { return to_string(e.gens); }

std::string to_string(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::Zn: return "Z" + std::to_string(e.n);
    case RingExpr::Kind::Prod: {
      std::string s = "prod(";
      for (std::size_t k = 0; k < e.args.size(); ++k) s += (k ? "," : "") + to_string(e.args[k]);
      return s + ")";
    }
    case RingExpr::Kind::Quot: return "quot(" + to_string(e.args[0]) + "," + to_string(e.ideal) + ")";
    case RingExpr::Kind::Idealize:
      return "idealize(" + std::to_string(e.n) + "," + std::to_string(e.d) + ")";
    case RingExpr::Kind::Loc: {
      std::string s = "loc(" + to_string(e.args[0]) + ",{";
      for (std::size_t k = 0; k < e.elems.size(); ++k) s += (k ? "," : "") + to_string(e.elems[k]);
      return s + "})";
    }
    case RingExpr::Kind::Table: return "table(" + e.path + ")";
  }
  return {};
}

RingPtr build_ring(const RingExpr& e, const Limits& limits) {
  switch (e.kind) {
    case RingExpr::Kind::Zn: return mk_zn(e.n, limits);
    case RingExpr::Kind::Prod: {
      std::vector<RingPtr> fs;
      for (const auto& a : e.args) fs.push_back(build_ring(a, limits));
      return mk_product(fs, limits);
    }
    case RingExpr::Kind::Quot: {
      auto base = build_ring(e.args[0], limits);
      return mk_quotient(resolve_ideal(base, e.ideal), limits).first;
    }
    case RingExpr::Kind::Idealize: return mk_idealization(e.n, e.d, limits);
    case RingExpr::Kind::Loc: {
      auto base = build_ring(e.args[0], limits);
      std::vector<Elem> s;
      for (const auto& lit : e.elems) s.push_back(resolve_elem(base, lit));
      auto loc = mk_localization(base, s, limits).first;
      return loc;
    }
    case RingExpr::Kind::Table: {
      for (const auto& name : catalog_names())
        if (name == e.path) return catalog_ring(name, limits);
      return parse_table_ring(read_file(e.path), "table(" + e.path + ")", limits);
    }
  }
  throw RingError(ErrorKind::Malformed, "bad ring expression");
}

Elem resolve_elem(const RingPtr& r, const ElemLit& lit) {
  const auto& st = r->structure();
  if (st.kind == RingStructure::Kind::Quotient || st.kind == RingStructure::Kind::Localization)
    return st.parent_map[resolve_elem(st.parent, lit)];
  if (lit.kind == ElemLit::Kind::Int) {
    if (st.kind == RingStructure::Kind::Zn) {
      if (lit.value < 0 || lit.value >= static_cast<long>(st.n))
        throw ParseError(lit.pos, "element " + std::to_string(lit.value) + " out of range for " +
                                      r->label());
      return static_cast<Elem>(lit.value);
    }
    if (lit.value == 0) return r->zero();
    if (lit.value == 1) return r->one();
  }
  if (auto e = r->find_name(to_string(lit))) return *e;
  throw ParseError(lit.pos, "'" + to_string(lit) + "' is not an element of " + r->label());
}

Ideal resolve_ideal(const RingPtr& r, const IdealExpr& e) {
  const ElemLit& g = e.gens;
  if (g.kind != ElemLit::Kind::Tuple) return principal_ideal(r, resolve_elem(r, g));
  try {
    return principal_ideal(r, resolve_elem(r, g));
  } catch (const ParseError&) {
  }
  std::vector<Elem> gens;
  for (const auto& p : g.parts) gens.push_back(resolve_elem(r, p));
  return ideal_generated(r, gens);
}

IdealExpr ideal_expr_of(const Ideal& i) {
  auto gens = ideal_generators(i);
  IdealExpr e;
  e.gens.kind = ElemLit::Kind::Tuple;
  if (gens.empty()) {
    e.gens.parts.push_back(ElemLit{});
    return e;
  }
  for (auto g : gens) e.gens.parts.push_back(literal_of(i.ring_ptr(), g));
  return e;
}

}  // namespace ringlab
