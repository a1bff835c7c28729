#include <algorithm>

#include "doctest.h"
#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/oracle.hpp"
#include "test_util.hpp"

using namespace ringlab;

namespace {

Elem el(const RingPtr& r, const std::string& s) {
  auto e = r->find_name(s);
  REQUIRE_MESSAGE(e.has_value(), s);
  return *e;
}

Ideal named(const RingPtr& r, std::vector<std::string> g) {
  std::vector<Elem> e;
  for (auto& s : g) e.push_back(el(r, s));
  return ideal_generated(r, e);
}

std::vector<std::string> names(const RingPtr& r, const std::vector<Elem>& w) {
  std::vector<std::string> out;
  for (auto e : w) out.push_back(r->name(e));
  return out;
}

std::vector<RingPtr> sample_rings() {
  return {mk_zn(2),  mk_zn(4),  mk_zn(6),  mk_zn(8),  mk_zn(12), mk_zn(16), mk_zn(30),
          mk_product({mk_zn(2), mk_zn(2)}), mk_product({mk_zn(2), mk_zn(4)}),
          mk_product({mk_zn(4), mk_zn(4)}), mk_product({mk_zn(2), mk_zn(2), mk_zn(2)}),
          mk_product({mk_zn(3), mk_zn(4)}), mk_idealization(12, 6), mk_idealization(8, 1),
          mk_idealization(8, 2), test_util::f2xy_square(),
          mk_quotient(principal_ideal(mk_zn(36), 4)).first};
}

}  // namespace

TEST_CASE("property names") {
  for (auto p : kAllProperties) CHECK(parse_property(property_name(p)) == p);
  CHECK(parse_property("1AP") == Property::OneAbsorbingPrimary);
  CHECK(parse_property("weakly_1AP") == Property::WeaklyOneAbsorbingPrimary);
  CHECK(parse_property("weakly_2AP_primary") == Property::WeaklyTwoAbsorbingPrimary);
  CHECK_FALSE(parse_property("nope").has_value());
}

TEST_CASE("Z6, (0): weakly 1-absorbing primary but not 1-absorbing primary") {
  auto z6 = mk_zn(6);
  auto rec = classify(zero_ideal(z6));
  CHECK(rec.holds(Property::WeaklyOneAbsorbingPrimary));
  CHECK_FALSE(rec.holds(Property::OneAbsorbingPrimary));
  CHECK(rec[Property::OneAbsorbingPrimary].witness == std::vector<Elem>{2, 2, 3});
  CHECK(rec.holds(Property::WeaklyPrimary));
  CHECK_FALSE(rec.holds(Property::Primary));
  CHECK(rec.holds(Property::WeaklyPrime));
  CHECK(rec.holds(Property::WeaklyTwoAbsorbingPrimary));
  auto tz = find_triple_zeros(zero_ideal(z6));
  CHECK(std::find(tz.begin(), tz.end(), TripleZero{2, 2, 3}) != tz.end());
}

TEST_CASE("Z12 (+) (6), I = 0 (+) (6)") {
  auto r = mk_idealization(12, 6);
  auto i = named(r, {"(0,6)"});
  auto rec = classify(i);
  CHECK_FALSE(rec.holds(Property::OneAbsorbingPrimary));
  CHECK(oracle::replays(i, Property::OneAbsorbingPrimary, rec[Property::OneAbsorbingPrimary].witness));
  // (3,0)(3,0)(4,6) = (0,6): a nonzero product in I with (9,0) not in I and
  // (4,6) not in the radical, so I is not weakly 1-absorbing primary either.
  const std::vector<Elem> nonzero = {el(r, "(3,0)"), el(r, "(3,0)"), el(r, "(4,6)")};
  CHECK(r->mul(r->mul(nonzero[0], nonzero[1]), nonzero[2]) == el(r, "(0,6)"));
  CHECK_FALSE(rec.holds(Property::WeaklyOneAbsorbingPrimary));
  CHECK(rec[Property::WeaklyOneAbsorbingPrimary].witness == nonzero);
  CHECK(oracle::replays(i, Property::WeaklyOneAbsorbingPrimary, nonzero));
  auto tz = find_triple_zeros(i);
  TripleZero expected{el(r, "(2,0)"), el(r, "(2,0)"), el(r, "(3,0)")};
  CHECK(std::find(tz.begin(), tz.end(), expected) != tz.end());
  CHECK(names(r, rec.rad.elements()) ==
        std::vector<std::string>{"(0,0)", "(0,6)", "(6,0)", "(6,6)"});
}

TEST_CASE("Z2^3, I = Z2 x 0 x 0 is not weakly 1-absorbing primary") {
  auto r = mk_product({mk_zn(2), mk_zn(2), mk_zn(2)});
  auto i = named(r, {"(1,0,0)"});
  auto v = is_weakly_one_absorbing_primary(i);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.size() == 3);
  auto w = names(r, v.witness);
  CHECK(w[0] == "(1,0,1)");
  CHECK(w[1] == "(1,0,1)");
  CHECK(w[2].ends_with(",1,0)"));
}

TEST_CASE("pair predicates") {
  auto z6 = mk_zn(6), z12 = mk_zn(12);
  CHECK(check_property(principal_ideal(z6, 2), Property::Prime).holds);
  CHECK(check_property(principal_ideal(z12, 4), Property::Primary).holds);
  auto p = check_property(principal_ideal(z12, 4), Property::Prime);
  CHECK_FALSE(p.holds);
  CHECK(p.witness == std::vector<Elem>{2, 2});
  CHECK(check_property(zero_ideal(z6), Property::WeaklyPrime).holds);
}

TEST_CASE("triple predicates") {
  CHECK(check_property(zero_ideal(mk_zn(6)), Property::WeaklyTwoAbsorbingPrimary).holds);
  CHECK(check_property(principal_ideal(mk_zn(30), 6), Property::TwoAbsorbing).holds);
  CHECK(check_property(principal_ideal(mk_zn(8), 4), Property::TwoAbsorbingPrimary).holds);
  CHECK(check_property(principal_ideal(mk_zn(8), 4), Property::OneAbsorbingPrimary).holds);
  CHECK(find_triple_zeros(principal_ideal(mk_zn(8), 4)).empty());
}

TEST_CASE("classify Z12 (4) and Z4 x Z9 with (2) x (3)") {
  auto z12 = mk_zn(12);
  auto rec = classify(principal_ideal(z12, 4));
  CHECK(rec.holds(Property::Primary));
  CHECK(rec.holds(Property::OneAbsorbingPrimary));
  CHECK(rec.holds(Property::WeaklyOneAbsorbingPrimary));

  auto r = mk_product({mk_zn(4), mk_zn(9)});
  auto i = named(r, {"(2,0)", "(0,3)"});
  CHECK(i.size() == 6);
  auto v = is_weakly_one_absorbing_primary(i);
  CHECK_FALSE(v.holds);
  std::vector<Elem> product_pattern = {el(r, "(1,0)"), el(r, "(1,0)"), el(r, "(2,1)")};
  CHECK(oracle::replays(i, Property::WeaklyOneAbsorbingPrimary, product_pattern));
  CHECK(oracle::replays(i, Property::WeaklyOneAbsorbingPrimary, v.witness));
}

TEST_CASE("improper ideals are rejected") {
  auto z6 = mk_zn(6);
  CHECK_THROWS_AS(classify(unit_ideal(z6)), RingError);
  CHECK_THROWS_AS(check_property(unit_ideal(z6), Property::Prime), RingError);
  CHECK_THROWS_AS(oracle::check(unit_ideal(z6), Property::Prime), RingError);
}

TEST_CASE("optimized predicates match the definition-literal oracle") {
  for (auto r : sample_rings())
    for (const auto& i : all_ideals(r)) {
      if (!i.is_proper()) continue;
      auto rec = classify(i);
      for (auto p : kAllProperties) {
        auto fast = rec[p];
        auto slow = oracle::check(i, p);
        INFO(r->label(), " ", i.to_string(), " ", property_name(p));
        CHECK(fast.holds == slow.holds);
        CHECK(fast.witness == slow.witness);
        if (!fast.holds) CHECK(oracle::replays(i, p, fast.witness));
      }
    }
}

TEST_CASE("lattice and golden properties") {
  for (auto r : sample_rings()) {
    auto z = classify(zero_ideal(r));
    CHECK(z.holds(Property::WeaklyOneAbsorbingPrimary));
    CHECK(z.holds(Property::WeaklyPrime));
    CHECK(z.holds(Property::WeaklyPrimary));
    bool local_nil = false;
    if (is_quasilocal(r)) local_nil = maximal_ideals(r)[0] == nilradical(r);
    for (const auto& i : all_ideals(r)) {
      if (!i.is_proper()) continue;
      auto rec = classify(i);
      CHECK(lattice_violations(rec).empty());
      if (local_nil) CHECK(rec.holds(Property::WeaklyOneAbsorbingPrimary));
      if (is_field(*r))
        CHECK(rec.holds(Property::WeaklyOneAbsorbingPrimary) ==
              rec.holds(Property::OneAbsorbingPrimary));
    }
  }
}

TEST_CASE("triple zeros satisfy their defining conditions") {
  for (auto r : sample_rings())
    for (const auto& i : all_ideals(r)) {
      if (!i.is_proper()) continue;
      auto rad = radical(i);
      auto tz = find_triple_zeros(i);
      std::size_t brute = 0;
      for (auto a : r->nonunit_list())
        for (auto b : r->nonunit_list())
          for (auto c : r->nonunit_list())
            if (r->mul(r->mul(a, b), c) == r->zero() && !i.contains(r->mul(a, b)) &&
                !oracle::in_radical(i, c))
              ++brute;
      CHECK(tz.size() == brute);
      for (auto& t : tz) {
        CHECK(r->mul(r->mul(t.a, t.b), t.c) == r->zero());
        CHECK_FALSE(i.contains(r->mul(t.a, t.b)));
        CHECK_FALSE(rad.contains(t.c));
      }
      CHECK(std::is_sorted(tz.begin(), tz.end(), [](const TripleZero& x, const TripleZero& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
      }));
    }
}

TEST_CASE("free triple zero") {
  auto z6 = mk_zn(6);
  auto zero = zero_ideal(z6);
  CHECK(is_free_triple_zero(zero, zero, zero, zero).free);
  auto fc = is_free_triple_zero(zero, principal_ideal(z6, 2), principal_ideal(z6, 2),
                                principal_ideal(z6, 3));
  CHECK_FALSE(fc.free);
  REQUIRE(fc.first_bad.has_value());
  CHECK(*fc.first_bad == TripleZero{2, 2, 3});
  CHECK_THROWS_AS(is_free_triple_zero(zero, principal_ideal(z6, 2), principal_ideal(z6, 2),
                                      principal_ideal(z6, 2)),
                  RingError);
  auto z12 = mk_zn(12);
  auto i6 = principal_ideal(z12, 6);
  auto res = is_free_triple_zero(i6, principal_ideal(z12, 2), principal_ideal(z12, 3), i6);
  // literal decision over the product set
  bool bad = false;
  for (auto a : principal_ideal(z12, 2).elements())
    for (auto b : principal_ideal(z12, 3).elements())
      for (auto c : i6.elements())
        bad = bad || (z12->mul(z12->mul(a, b), c) == 0 && !i6.contains(z12->mul(a, b)) &&
                      !oracle::in_radical(i6, c));
  CHECK(res.free == !bad);
}
