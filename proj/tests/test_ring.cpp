#include <numeric>
#include <set>

#include "doctest.h"
#include "ringlab/constructions.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"
#include "test_util.hpp"

using namespace ringlab;

TEST_CASE("Z_n units are the residues coprime to n") {
  for (unsigned n : {2u, 6u, 12u, 17u, 60u}) {
    auto r = mk_zn(n);
    CHECK(r->order() == n);
    std::set<Elem> expected;
    for (unsigned a = 0; a < n; ++a)
      if (std::gcd(a, n) == 1) expected.insert(static_cast<Elem>(a));
    auto units = r->units().to_vector();
    CHECK(std::set<Elem>(units.begin(), units.end()) == expected);
  }
  CHECK(mk_zn(6)->units().to_vector() == std::vector<Elem>{1, 5});
  CHECK(mk_zn(12)->units().to_vector() == std::vector<Elem>{1, 5, 7, 11});
  auto f2 = mk_zn(2);
  CHECK(f2->is_unit(1));
  CHECK(f2->name(1) == "1");
}

TEST_CASE("Z_n rejects n < 2") {
  CHECK_THROWS_AS(mk_zn(1), RingError);
  try {
    mk_zn(0);
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::InvalidOrder);
  }
}

TEST_CASE("order bound is a configuration value") {
  Limits small;
  small.max_order = 16;
  CHECK_THROWS_AS(mk_zn(17, small), RingError);
  CHECK(mk_zn(16, small)->order() == 16);
  CHECK_THROWS_AS(mk_product({mk_zn(4), mk_zn(5)}, small), RingError);
}

TEST_CASE("products") {
  auto z2z3 = mk_product({mk_zn(2), mk_zn(3)});
  CHECK(z2z3->order() == 6);
  CHECK(z2z3->units().size() == mk_zn(6)->units().size());

  auto z2cubed = mk_product({mk_zn(2), mk_zn(2), mk_zn(2)});
  CHECK(z2cubed->order() == 8);
  CHECK(z2cubed->units().size() == 1);
  CHECK(z2cubed->name(*z2cubed->units().to_vector().begin()) == "(1,1,1)");
  CHECK(z2cubed->find_name("(1,0,1)").has_value());

  auto z4z9 = mk_product({mk_zn(4), mk_zn(9)});
  CHECK(z4z9->order() == 36);
  CHECK(z4z9->units().size() == 12);

  CHECK_THROWS_AS(mk_product({mk_zn(4)}), RingError);
}

TEST_CASE("unit set of a product is the product of unit sets") {
  for (auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{{4, 6}, {8, 9}, {2, 5}}) {
    auto a = mk_zn(p), b = mk_zn(q);
    auto r = mk_product({a, b});
    for (std::size_t x = 0; x < r->order(); ++x) {
      auto parts = r->decode(static_cast<Elem>(x));
      CHECK(r->is_unit(static_cast<Elem>(x)) == (a->is_unit(parts[0]) && b->is_unit(parts[1])));
      CHECK(r->encode(parts) == x);
    }
  }
}

TEST_CASE("idealization Z12 (+) (6)") {
  auto r = mk_idealization(12, 6);
  CHECK(r->order() == 24);
  const Elem two = *r->find_name("(2,0)"), three = *r->find_name("(3,0)");
  CHECK(r->mul(r->mul(two, two), three) == r->zero());
  CHECK(r->name(r->zero()) == "(0,0)");
  CHECK(r->name(r->one()) == "(1,0)");
  // (a,m) is a unit iff a is a unit of Z_n
  auto z12 = mk_zn(12);
  for (std::size_t x = 0; x < r->order(); ++x)
    CHECK(r->is_unit(static_cast<Elem>(x)) == z12->is_unit(static_cast<Elem>(x / 2)));

  auto trivial = mk_idealization(2, 2);
  CHECK(trivial->order() == 2);
  CHECK_THROWS_AS(mk_idealization(12, 5), RingError);
}

TEST_CASE("idealization orders and nilpotents") {
  for (unsigned n = 2; n <= 16; ++n)
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d) continue;
      auto r = mk_idealization(n, d);
      CHECK(r->order() == n * (n / d));
      auto zn = mk_zn(n);
      for (std::size_t x = 0; x < r->order(); ++x) {
        Elem a = static_cast<Elem>(x / (n / d));
        // power iteration in Z_n
        bool nil = false;
        unsigned p = a;
        for (unsigned k = 0; k < n && !nil; ++k) {
          nil = p % n == 0;
          p = (p * a) % n;
        }
        CHECK(r->nilpotents().contains(x) == nil);
      }
      CHECK(nilradical(r).members() == r->nilpotents());
    }
}

TEST_CASE("quotients") {
  auto z12 = mk_zn(12);
  auto [q4, pi4] = mk_quotient(principal_ideal(z12, 4));
  CHECK(q4->order() == 4);
  CHECK(q4->units().size() == 2);
  CHECK(hom_check(pi4).ok);

  auto [q2, pi2] = mk_quotient(principal_ideal(z12, 2));
  CHECK(q2->order() == 2);
  CHECK(is_field(*q2));

  auto z6 = mk_zn(6);
  auto [q0, pi0] = mk_quotient(zero_ideal(z6));
  CHECK(q0->order() == 6);
  CHECK(pi0.injective());
  for (std::size_t a = 0; a < 6; ++a) CHECK(pi0(static_cast<Elem>(a)) == a);

  CHECK_THROWS_AS(mk_quotient(unit_ideal(z12)), RingError);
}

TEST_CASE("quotient tables pass full validation and |R/J| |J| = |R|") {
  for (auto r : {mk_zn(12), mk_product({mk_zn(4), mk_zn(6)}), mk_idealization(8, 2)}) {
    for (const auto& j : all_ideals(r)) {
      if (!j.is_proper()) continue;
      auto [q, pi] = mk_quotient(j);
      CHECK(q->order() * j.size() == r->order());
      CHECK_FALSE(check_ring_axioms(q->order(), q->add_table(), q->mul_table()).has_value());
      CHECK(hom_check(pi).ok);
      CHECK(pi.kernel() == j.members());
    }
  }
}

namespace {

/// Literal fraction classes: pairs (a,s) with (a,s) ~ (b,t) iff u(at - bs) = 0
/// for some u in S. Checks the relation is an equivalence and returns the
/// number of classes.
std::size_t literal_fraction_classes(const FiniteRing& r, const ElemSet& s) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t a = 0; a < r.order(); ++a)
    s.for_each([&](Elem t) { pairs.emplace_back(static_cast<Elem>(a), t); });
  auto rel = [&](std::pair<Elem, Elem> x, std::pair<Elem, Elem> y) {
    Elem diff = r.sub(r.mul(x.first, y.second), r.mul(y.first, x.second));
    bool found = false;
    s.for_each([&](Elem u) { found = found || r.mul(u, diff) == r.zero(); });
    return found;
  };
  const std::size_t m = pairs.size();
  std::vector<std::vector<bool>> eq(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) eq[i][j] = rel(pairs[i], pairs[j]);
  for (std::size_t i = 0; i < m; ++i) {
    REQUIRE(eq[i][i]);
    for (std::size_t j = 0; j < m; ++j) {
      REQUIRE(eq[i][j] == eq[j][i]);
      if (!eq[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (eq[j][k]) REQUIRE(eq[i][k]);
    }
  }
  std::vector<bool> done(m);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (done[i]) continue;
    ++classes;
    for (std::size_t j = 0; j < m; ++j)
      if (eq[i][j]) done[j] = true;
  }
  return classes;
}

}  // namespace

TEST_CASE("localization matches the literal fraction construction") {
  auto z12 = mk_zn(12);
  {
    auto [l, f] = mk_localization(z12, {4});
    CHECK(l->order() == 3);
    CHECK(l->is_unit(f(4)));
    CHECK(literal_fraction_classes(*z12, multiplicative_closure(*z12, {4})) == 3);
  }
  {
    auto [l, f] = mk_localization(z12, {3});
    CHECK(multiplicative_closure(*z12, {3}).to_vector() == std::vector<Elem>{1, 3, 9});
    CHECK(l->order() == 4);
    CHECK(literal_fraction_classes(*z12, multiplicative_closure(*z12, {3})) == 4);
  }
  {
    auto z6 = mk_zn(6);
    auto [l, f] = mk_localization(z6, {5});
    CHECK(l->order() == 6);
    CHECK(f.injective());
  }
  CHECK_THROWS_AS(mk_localization(z12, {6}), RingError);
  try {
    mk_localization(z12, {2, 3});
    FAIL("expected degenerate localization");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::DegenerateLocalization);
  }
}

TEST_CASE("localization: every member of S maps to a unit, class count agrees") {
  for (auto r : {mk_zn(24), mk_product({mk_zn(4), mk_zn(3)}), mk_idealization(6, 2),
                 test_util::f2xy_square()}) {
    for (auto s : r->nonunit_list()) {
      auto closure = multiplicative_closure(*r, {s});
      if (closure.contains(r->zero())) continue;
      auto [l, f] = mk_localization(r, {s});
      CHECK(hom_check(f).ok);
      closure.for_each([&](Elem u) { CHECK(l->is_unit(f(u))); });
      CHECK(literal_fraction_classes(*r, closure) == l->order());
    }
  }
}

TEST_CASE("mk_table validation") {
  auto z4 = mk_zn(4);
  std::vector<std::vector<unsigned>> add(4, std::vector<unsigned>(4)), mul = add;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      add[a][b] = (a + b) % 4;
      mul[a][b] = (a * b) % 4;
    }
  auto t = mk_table(add, mul, "z4");
  CHECK(t->order() == 4);
  CHECK(t->units().to_vector() == z4->units().to_vector());

  auto f = test_util::f2xy_square();
  CHECK(f->order() == 8);
  CHECK(f->units().size() == 4);
  CHECK(is_quasilocal(f));

  // Z4 tables with one product disturbed: 2*3 -> 0 (and 3*2 kept symmetric)
  auto bad = mul;
  bad[2][3] = bad[3][2] = 0;
  try {
    mk_table(add, bad);
    FAIL("expected validation error");
  } catch (const ValidationError& e) {
    CHECK(e.witness().size() == 3);
    CHECK((e.axiom() == "multiplication associative" || e.axiom() == "distributive"));
  }

  // an asymmetric product is caught as non-commutative with a witness pair
  auto asym = mul;
  asym[1][2] = 3;
  try {
    mk_table(add, asym);
    FAIL("expected validation error");
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "multiplication commutative");
    CHECK(e.witness() == std::vector<Elem>{1, 2});
  }
}

TEST_CASE("non-associative multiplication reports the triple") {
  // Z3 additive group, multiplication perturbed on a single unordered pair.
  std::vector<std::vector<unsigned>> add = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<unsigned>> mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  try {
    mk_table(add, mul);
    FAIL("expected validation error");
  } catch (const ValidationError& e) {
    CHECK(e.witness().size() == 3);
    auto w = e.witness();
    const FiniteRing* none = nullptr;
    (void)none;
    auto M = [&](unsigned a, unsigned b) { return mul[a][b]; };
    auto A = [&](unsigned a, unsigned b) { return add[a][b]; };
    if (e.axiom() == "multiplication associative")
      CHECK(M(M(w[0], w[1]), w[2]) != M(w[0], M(w[1], w[2])));
    else
      CHECK(M(w[0], A(w[1], w[2])) != A(M(w[0], w[1]), M(w[0], w[2])));
  }
}

TEST_CASE("table ring text format") {
  auto f = test_util::f2xy_square();
  auto again = parse_table_ring(format_table_ring(*f), "again");
  CHECK(again->add_table() == f->add_table());
  CHECK(again->mul_table() == f->mul_table());
  CHECK_THROWS_AS(parse_table_ring("2\n0 1 1 0\n0 0"), RingError);
  CHECK_THROWS_AS(parse_table_ring("2\n0 1 1 0\n0 0 0 1 7"), RingError);
}

TEST_CASE("hom_check") {
  auto z2 = mk_zn(2), z3 = mk_zn(3);
  auto p = mk_product({z2, z3});
  RingHom proj{p, z2, {}};
  for (std::size_t x = 0; x < p->order(); ++x) proj.map.push_back(p->decode(static_cast<Elem>(x))[0]);
  CHECK(hom_check(proj).ok);
  const Elem one_zero = *p->find_name("(1,0)");
  CHECK_FALSE(p->is_unit(one_zero));
  CHECK(z2->is_unit(proj(one_zero)));
  CHECK_FALSE(proj.preserves_nonunits());

  RingHom bad{p, z2, std::vector<Elem>(p->order(), 0)};
  auto res = hom_check(bad);
  CHECK_FALSE(res.ok);
  CHECK(res.law == "f(1)=1");

  RingHom wrong_len{p, z2, {0, 1}};
  CHECK_FALSE(hom_check(wrong_len).ok);
}

TEST_CASE("hom image and preimage") {
  auto z12 = mk_zn(12);
  auto j = principal_ideal(z12, 4);
  auto [q, pi] = mk_quotient(j);
  CHECK(hom_preimage_ideal(pi, zero_ideal(q)) == j);
  CHECK(hom_preimage_ideal(pi, unit_ideal(q)) == unit_ideal(z12));
  auto img = hom_image_ideal(pi, principal_ideal(z12, 2));
  // (2) + (4) = (2), whose image in Z12/(4) ~ Z4 is {0,2}
  CHECK(img.size() == 2);
  CHECK(hom_preimage_ideal(pi, img) == principal_ideal(z12, 2));

  auto z6 = mk_zn(6);
  RingHom incl{mk_zn(2), z6, {0, 3}};  // not unital, but the surjectivity check comes first
  CHECK_THROWS_AS(hom_image_ideal(incl, zero_ideal(incl.domain)), RingError);
}

TEST_CASE("cross-ring mixing is rejected") {
  auto a = mk_zn(6), b = mk_zn(6);
  CHECK_THROWS_AS(ideal_sum(zero_ideal(a), zero_ideal(b)), RingError);
  CHECK_THROWS_AS(principal_ideal(a, 2).is_subset_of(principal_ideal(b, 2)), RingError);
}
