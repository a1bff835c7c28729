#include "ringlab/ring.hpp"

#include <atomic>
#include <numeric>
#include <sstream>

namespace ringlab {

namespace {

std::atomic<std::uint64_t> g_next_ring_id{1};

void check_order(std::size_t order, const Limits& limits) {
  if (order > limits.max_order || order > kHardMaxOrder)
    throw RingError(ErrorKind::Resource,
                    "ring order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(std::min(limits.max_order, kHardMaxOrder)));
}

}  // namespace

std::optional<AxiomViolation> check_ring_axioms(std::size_t n,
                                                const std::vector<Elem>& add,
                                                const std::vector<Elem>& mul) {
  auto A = [&](std::size_t a, std::size_t b) -> std::size_t { return add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return mul[a * n + b]; };
  auto w = [](std::initializer_list<std::size_t> xs) {
    std::vector<Elem> v;
    for (auto x : xs) v.push_back(static_cast<Elem>(x));
    return v;
  };

  if (n == 0) return AxiomViolation{"nonempty carrier", {}};
  if (add.size() != n * n || mul.size() != n * n)
    return AxiomViolation{"square tables of equal order", {}};
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] >= n) return AxiomViolation{"addition closed", w({i / n, i % n})};
    if (mul[i] >= n) return AxiomViolation{"multiplication closed", w({i / n, i % n})};
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (A(a, b) != A(b, a)) return AxiomViolation{"addition commutative", w({a, b})};
      if (M(a, b) != M(b, a))
        return AxiomViolation{"multiplication commutative", w({a, b})};
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (A(A(a, b), c) != A(a, A(b, c)))
          return AxiomViolation{"addition associative", w({a, b, c})};

  std::optional<std::size_t> zero, one;
  for (std::size_t e = 0; e < n && !zero; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = A(e, a) == a;
    if (ok) zero = e;
  }
  if (!zero) return AxiomViolation{"additive identity", {}};
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = A(a, b) == *zero;
    if (!has_inverse) return AxiomViolation{"additive inverse", w({a})};
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (M(M(a, b), c) != M(a, M(b, c)))
          return AxiomViolation{"multiplication associative", w({a, b, c})};
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          return AxiomViolation{"distributive", w({a, b, c})};
      }
  for (std::size_t e = 0; e < n && !one; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = M(e, a) == a;
    if (ok) one = e;
  }
  if (!one) return AxiomViolation{"multiplicative identity", {}};
  if (*one == *zero) return AxiomViolation{"one != zero", w({*one})};
  return std::nullopt;
}

RingPtr FiniteRing::make(std::vector<Elem> add, std::vector<Elem> mul,
                         std::vector<std::string> names, std::string label,
                         RingStructure structure, const Limits& limits) {
  std::size_t n = 0;
  while (n * n < add.size()) ++n;
  check_order(n, limits);
  if (n * n != add.size() || add.size() != mul.size())
    throw ValidationError("square tables of equal order", {});
  if (limits.validate)
    if (auto v = check_ring_axioms(n, add, mul)) throw ValidationError(v->axiom, v->witness);

  std::shared_ptr<FiniteRing> r(new FiniteRing());
  r->n_ = n;
  r->add_ = std::move(add);
  r->mul_ = std::move(mul);
  r->id_ = g_next_ring_id.fetch_add(1);
  r->label_ = std::move(label);
  r->structure_ = std::move(structure);

  for (std::size_t e = 0; e < n; ++e) {
    bool z = true, o = true;
    for (std::size_t a = 0; a < n && (z || o); ++a) {
      z = z && r->add_[e * n + a] == a;
      o = o && r->mul_[e * n + a] == a;
    }
    if (z) r->zero_ = static_cast<Elem>(e);
    if (o) r->one_ = static_cast<Elem>(e);
  }

  r->neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (r->add_[a * n + b] == r->zero_) {
        r->neg_[a] = static_cast<Elem>(b);
        break;
      }

  r->units_ = ElemSet(n);
  r->nonunit_set_ = ElemSet(n);
  for (std::size_t a = 0; a < n; ++a) {
    bool unit = false;
    for (std::size_t b = 0; b < n && !unit; ++b) unit = r->mul_[a * n + b] == r->one_;
    if (unit) {
      r->units_.insert(a);
    } else {
      r->nonunit_set_.insert(a);
      r->nonunits_.push_back(static_cast<Elem>(a));
    }
  }

  r->stable_pow_.resize(n);
  r->nilpotents_ = ElemSet(n);
  for (std::size_t a = 0; a < n; ++a) {
    r->stable_pow_[a] = r->pow(static_cast<Elem>(a), n);
    if (r->stable_pow_[a] == r->zero_) r->nilpotents_.insert(a);
  }

  if (names.size() != n) {
    names.clear();
    for (std::size_t a = 0; a < n; ++a) names.push_back(std::to_string(a));
  }
  r->names_ = std::move(names);
  return r;
}

Elem FiniteRing::pow(Elem a, std::size_t k) const {
  Elem result = one_, base = a;
  while (k) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> FiniteRing::find_name(const std::string& s) const {
  for (std::size_t a = 0; a < n_; ++a)
    if (names_[a] == s) return static_cast<Elem>(a);
  return std::nullopt;
}

std::vector<Elem> FiniteRing::decode(Elem a) const {
  const auto& fs = structure_.factors;
  std::vector<Elem> parts(fs.size());
  std::size_t x = a;
  for (std::size_t i = fs.size(); i-- > 0;) {
    parts[i] = static_cast<Elem>(x % fs[i]->order());
    x /= fs[i]->order();
  }
  return parts;
}

Elem FiniteRing::encode(const std::vector<Elem>& parts) const {
  const auto& fs = structure_.factors;
  std::size_t x = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) x = x * fs[i]->order() + parts[i];
  return static_cast<Elem>(x);
}

void require_same_ring(const FiniteRing& a, const FiniteRing& b) {
  if (a.id() != b.id())
    throw RingError(ErrorKind::RingMismatch,
                    "elements of " + a.label() + " mixed with elements of " + b.label());
}

RingPtr mk_zn(unsigned n, const Limits& limits) {
  if (n < 2) throw RingError(ErrorKind::InvalidOrder, "Z_n requires n >= 2");
  check_order(n, limits);
  std::vector<Elem> add(n * n), mul(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  RingStructure s;
  s.kind = RingStructure::Kind::Zn;
  s.n = n;
  return FiniteRing::make(std::move(add), std::move(mul), {}, "Z" + std::to_string(n),
                          std::move(s), limits);
}

RingPtr mk_product(const std::vector<RingPtr>& factors, const Limits& limits) {
  if (factors.size() < 2)
    throw RingError(ErrorKind::Arity, "a product needs at least two factors");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->order();
    check_order(n, limits);
  }

  // Mixed radix with the first factor most significant, so index order is
  // lexicographic order on tuples.
  auto decode = [&](std::size_t x) {
    std::vector<Elem> parts(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      parts[i] = static_cast<Elem>(x % factors[i]->order());
      x /= factors[i]->order();
    }
    return parts;
  };
  std::vector<std::vector<Elem>> tuples(n);
  for (std::size_t x = 0; x < n; ++x) tuples[x] = decode(x);
  auto encode = [&](const std::vector<Elem>& p) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i]->order() + p[i];
    return static_cast<Elem>(x);
  };

  std::vector<Elem> add(n * n), mul(n * n), tmp(factors.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i)
        tmp[i] = factors[i]->add(tuples[a][i], tuples[b][i]);
      add[a * n + b] = encode(tmp);
      for (std::size_t i = 0; i < factors.size(); ++i)
        tmp[i] = factors[i]->mul(tuples[a][i], tuples[b][i]);
      mul[a * n + b] = encode(tmp);
    }

  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ",";
      s += factors[i]->name(tuples[x][i]);
    }
    names[x] = s + ")";
  }
  std::string label = "prod(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) label += ",";
    label += factors[i]->label();
  }
  label += ")";

  RingStructure s;
  s.kind = RingStructure::Kind::Product;
  s.factors = factors;
  return FiniteRing::make(std::move(add), std::move(mul), std::move(names), std::move(label),
                          std::move(s), limits);
}

RingPtr mk_idealization(unsigned n, unsigned d, const Limits& limits) {
  if (n < 2) throw RingError(ErrorKind::InvalidOrder, "idealization requires n >= 2");
  if (d == 0 || n % d != 0)
    throw RingError(ErrorKind::InvalidModule,
                    std::to_string(d) + " does not divide " + std::to_string(n));
  const unsigned m = n / d;  // |(d)|
  const std::size_t order = static_cast<std::size_t>(n) * m;
  check_order(order, limits);

  // Element (a, k*d) has index a*m + k.
  std::vector<Elem> add(order * order), mul(order * order);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned k = 0; k < m; ++k)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned l = 0; l < m; ++l) {
          std::size_t x = a * m + k, y = b * m + l;
          add[x * order + y] = static_cast<Elem>(((a + b) % n) * m + (k + l) % m);
          // (a, kd)(b, ld) = (ab, (al + bk)d)
          unsigned prod_mod = (a * l + b * k) % m;
          mul[x * order + y] = static_cast<Elem>(((a * b) % n) * m + prod_mod);
        }
  std::vector<std::string> names(order);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned k = 0; k < m; ++k)
      names[a * m + k] = "(" + std::to_string(a) + "," + std::to_string(k * d) + ")";

  RingStructure s;
  s.kind = RingStructure::Kind::Idealization;
  s.n = n;
  s.d = d;
  return FiniteRing::make(std::move(add), std::move(mul), std::move(names),
                          "idealize(" + std::to_string(n) + "," + std::to_string(d) + ")",
                          std::move(s), limits);
}

RingPtr mk_table(const std::vector<std::vector<unsigned>>& add,
                 const std::vector<std::vector<unsigned>>& mul, std::string label,
                 const Limits& limits) {
  const std::size_t n = add.size();
  if (n == 0 || mul.size() != n)
    throw ValidationError("square tables of equal order", {});
  check_order(n, limits);
  std::vector<Elem> fa(n * n), fm(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      throw ValidationError("square tables of equal order", {static_cast<Elem>(i)});
    for (std::size_t j = 0; j < n; ++j) {
      if (add[i][j] >= n)
        throw ValidationError("addition closed", {static_cast<Elem>(i), static_cast<Elem>(j)});
      if (mul[i][j] >= n)
        throw ValidationError("multiplication closed",
                              {static_cast<Elem>(i), static_cast<Elem>(j)});
      fa[i * n + j] = static_cast<Elem>(add[i][j]);
      fm[i * n + j] = static_cast<Elem>(mul[i][j]);
    }
  }
  return FiniteRing::make(std::move(fa), std::move(fm), {}, std::move(label), {}, limits);
}

bool RingHom::injective() const {
  ElemSet seen(codomain->order());
  for (auto y : map) {
    if (seen.contains(y)) return false;
    seen.insert(y);
  }
  return true;
}

bool RingHom::surjective() const {
  ElemSet seen(codomain->order());
  for (auto y : map) seen.insert(y);
  return seen.size() == codomain->order();
}

bool RingHom::preserves_nonunits() const {
  for (auto a : domain->nonunit_list())
    if (codomain->is_unit(map[a])) return false;
  return true;
}

ElemSet RingHom::kernel() const {
  ElemSet k(domain->order());
  for (std::size_t a = 0; a < map.size(); ++a)
    if (map[a] == codomain->zero()) k.insert(a);
  return k;
}

HomCheck hom_check(const RingHom& f) {
  const auto& R = *f.domain;
  const auto& S = *f.codomain;
  if (f.map.size() != R.order()) return {false, "map length equals domain order", {}};
  for (std::size_t a = 0; a < f.map.size(); ++a)
    if (!S.valid(f.map[a])) return {false, "image index valid", {static_cast<Elem>(a)}};
  if (f(R.one()) != S.one()) return {false, "f(1)=1", {R.one()}};
  if (f(R.zero()) != S.zero()) return {false, "f(0)=0", {R.zero()}};
  for (std::size_t a = 0; a < R.order(); ++a)
    for (std::size_t b = 0; b < R.order(); ++b) {
      Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
      if (f(R.add(x, y)) != S.add(f(x), f(y))) return {false, "f(a+b)=f(a)+f(b)", {x, y}};
      if (f(R.mul(x, y)) != S.mul(f(x), f(y))) return {false, "f(ab)=f(a)f(b)", {x, y}};
    }
  return {};
}

RingPtr parse_table_ring(const std::string& text, std::string label, const Limits& limits) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) throw RingError(ErrorKind::Malformed, "table ring: missing order");
  check_order(static_cast<std::size_t>(n), limits);
  auto read_table = [&](const char* which) {
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    for (auto& row : t)
      for (auto& x : row) {
        long long v;
        if (!(in >> v) || v < 0)
          throw RingError(ErrorKind::Malformed,
                          std::string("table ring: truncated or negative ") + which + " table");
        x = static_cast<unsigned>(v);
      }
    return t;
  };
  auto add = read_table("addition");
  auto mul = read_table("multiplication");
  std::string extra;
  if (in >> extra) throw RingError(ErrorKind::Malformed, "table ring: trailing data");
  return mk_table(add, mul, std::move(label), limits);
}

std::string format_table_ring(const FiniteRing& r) {
  std::ostringstream out;
  const std::size_t n = r.order();
  out << n << "\n";
  for (const auto* t : {&r.add_table(), &r.mul_table()}) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) out << (b ? " " : "") << (*t)[a * n + b];
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace ringlab
