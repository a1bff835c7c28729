#include <numeric>

#include "doctest.h"
#include "ringlab/constructions.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/oracle.hpp"
#include "test_util.hpp"

using namespace ringlab;

namespace {

Ideal gen(const RingPtr& r, std::vector<Elem> g) { return ideal_generated(r, g); }

Ideal named(const RingPtr& r, std::vector<std::string> g) {
  std::vector<Elem> e;
  for (auto& s : g) e.push_back(*r->find_name(s));
  return ideal_generated(r, e);
}

std::vector<RingPtr> sample_rings() {
  return {mk_zn(2),  mk_zn(6),  mk_zn(8),  mk_zn(12), mk_zn(30), mk_zn(36),
          mk_product({mk_zn(2), mk_zn(2)}), mk_product({mk_zn(4), mk_zn(6)}),
          mk_product({mk_zn(2), mk_zn(2), mk_zn(2)}), mk_idealization(12, 6),
          mk_idealization(8, 1), mk_idealization(9, 3), test_util::f2xy_square()};
}

/// Naive closure: iterate add and ring-multiply until nothing new appears.
ElemSet naive_closure(const FiniteRing& r, const std::vector<Elem>& gens) {
  ElemSet s(r.order());
  s.insert(r.zero());
  for (auto g : gens) s.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto a : s.to_vector()) {
      for (std::size_t x = 0; x < r.order(); ++x) {
        Elem p = r.mul(a, static_cast<Elem>(x));
        if (!s.contains(p)) { s.insert(p); grew = true; }
      }
      for (auto b : s.to_vector()) {
        Elem q = r.add(a, b);
        if (!s.contains(q)) { s.insert(q); grew = true; }
      }
    }
  }
  return s;
}

/// Every subset that is an ideal, by brute force over subsets (order <= 12).
std::size_t brute_ideal_count(const FiniteRing& r) {
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << r.order()); ++mask) {
    ElemSet s(r.order());
    for (std::size_t i = 0; i < r.order(); ++i)
      if (mask & (1u << i)) s.insert(static_cast<Elem>(i));
    if (s.contains(r.zero()) && is_ideal_set(r, s)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("ideal_generated") {
  auto z12 = mk_zn(12);
  CHECK(gen(z12, {8}).elements() == std::vector<Elem>{0, 4, 8});
  CHECK(gen(z12, {}).elements() == std::vector<Elem>{0});
  CHECK(gen(mk_zn(6), {2, 3}).is_whole());
  CHECK(gen(z12, {8, 6}) == gen(z12, {6, 8}));
  CHECK(gen(z12, {8, 6}) == principal_ideal(z12, 2));
}

TEST_CASE("ideal_generated agrees with naive closure, independent of generator order") {
  for (auto r : sample_rings()) {
    auto nu = r->nonunit_list();
    for (std::size_t i = 0; i < nu.size(); i += 3)
      for (std::size_t j = 0; j < nu.size(); j += 5) {
        auto a = gen(r, {nu[i], nu[j]});
        CHECK(a.members() == naive_closure(*r, {nu[i], nu[j]}));
        CHECK(a == gen(r, {nu[j], nu[i]}));
        CHECK(gen(r, ideal_generators(a)) == a);
      }
  }
}

TEST_CASE("from_members validates") {
  auto z12 = mk_zn(12);
  CHECK(Ideal::from_members(z12, {0, 4, 8}) == principal_ideal(z12, 4));
  CHECK_THROWS_AS(Ideal::from_members(z12, {0, 4}), RingError);
  CHECK_THROWS_AS(Ideal::from_members(z12, {4, 8}), RingError);
  CHECK_THROWS_AS(Ideal::from_members(z12, {0, 12}), RingError);
}

TEST_CASE("all_ideals") {
  auto z12 = mk_zn(12);
  auto ids = all_ideals(z12);
  REQUIRE(ids.size() == 6);
  std::vector<Elem> gens = {0, 6, 4, 3, 2, 1};
  for (std::size_t k = 0; k < 6; ++k) CHECK(ids[k] == principal_ideal(z12, gens[k]));
  CHECK(all_ideals(mk_zn(7)).size() == 2);
  CHECK(all_ideals(mk_product({mk_zn(2), mk_zn(2)})).size() == 4);
  Limits tight;
  tight.max_ideals = 5;
  CHECK_THROWS_AS(all_ideals(z12, tight), RingError);
}

TEST_CASE("ideal count of Z_n is the divisor count") {
  for (unsigned n = 2; n <= 60; ++n) {
    unsigned d = 0;
    for (unsigned k = 1; k <= n; ++k) d += n % k == 0;
    CHECK(all_ideals(mk_zn(n)).size() == d);
  }
}

TEST_CASE("ideal enumeration agrees with subset brute force") {
  for (auto r : {mk_zn(8), mk_zn(12), mk_product({mk_zn(2), mk_zn(2), mk_zn(2)}),
                 mk_idealization(4, 2), mk_idealization(4, 1), test_util::f2xy_square(),
                 mk_product({mk_zn(2), mk_zn(4)})}) {
    CHECK(all_ideals(r).size() == brute_ideal_count(*r));
  }
}

TEST_CASE("radical") {
  auto z12 = mk_zn(12);
  CHECK(radical(principal_ideal(z12, 4)) == principal_ideal(z12, 2));
  CHECK(radical(zero_ideal(mk_zn(6))).is_zero());
  auto r = mk_idealization(12, 6);
  auto i = named(r, {"(0,6)"});
  CHECK(i.size() == 2);
  auto rad = radical(i);
  std::vector<std::string> names;
  for (auto e : rad.elements()) names.push_back(r->name(e));
  CHECK(names == std::vector<std::string>{"(0,0)", "(0,6)", "(6,0)", "(6,6)"});
}

TEST_CASE("residual, annihilator, zero divisors") {
  auto z12 = mk_zn(12);
  CHECK(residual(principal_ideal(z12, 4), principal_ideal(z12, 2)) == principal_ideal(z12, 2));
  auto z6 = mk_zn(6);
  CHECK(residual(zero_ideal(z6), 3) == principal_ideal(z6, 2));
  CHECK(annihilator(z12, 6) == principal_ideal(z12, 2));
  CHECK(annihilator(z12, 0).is_whole());
  CHECK(annihilator(z12, 1).is_zero());
  CHECK(zero_divisors(*z6).to_vector() == std::vector<Elem>{0, 2, 3, 4});
  CHECK(zero_divisors(*mk_zn(7)).to_vector() == std::vector<Elem>{0});
  CHECK(z_relative(principal_ideal(z12, 4)).contains(2));
}

TEST_CASE("sum, intersection, product, power") {
  auto z12 = mk_zn(12);
  CHECK(ideal_product(principal_ideal(z12, 2), principal_ideal(z12, 3)) == principal_ideal(z12, 6));
  auto z6 = mk_zn(6);
  CHECK(ideal_intersection(principal_ideal(z6, 2), principal_ideal(z6, 3)).is_zero());
  CHECK(ideal_sum(principal_ideal(z6, 2), principal_ideal(z6, 3)).is_whole());
  auto i = principal_ideal(z12, 4);
  CHECK(ideal_product(i, unit_ideal(z12)) == i);
  CHECK(ideal_power(principal_ideal(z12, 2), 2) == principal_ideal(z12, 4));
}

TEST_CASE("nilradical, maximal ideals, Jacobson radical") {
  auto z12 = mk_zn(12);
  CHECK(nilradical(z12) == principal_ideal(z12, 6));
  auto mx = maximal_ideals(z12);
  REQUIRE(mx.size() == 2);
  CHECK(mx[0] == principal_ideal(z12, 3));
  CHECK(mx[1] == principal_ideal(z12, 2));
  CHECK(jacobson_radical(z12) == principal_ideal(z12, 6));
  auto z8 = mk_zn(8);
  CHECK(nilradical(z8) == principal_ideal(z8, 2));
  CHECK(maximal_ideals(z8).size() == 1);
  auto f = mk_zn(5);
  CHECK(nilradical(f).is_zero());
  CHECK(jacobson_radical(f).is_zero());
}

TEST_CASE("ring class predicates") {
  auto z6 = mk_zn(6);
  CHECK(is_vnr(*z6));
  CHECK(is_reduced(*z6));
  CHECK_FALSE(is_divided(z6));
  auto z8 = mk_zn(8);
  CHECK(is_chained(*z8));
  CHECK(is_divided(z8));
  CHECK(is_quasilocal(z8));
  CHECK(is_field(*mk_zn(7)));
  CHECK(is_domain(*mk_zn(7)));
  CHECK_FALSE(is_domain(*z6));
  CHECK_FALSE(is_quasilocal(z6));
}

TEST_CASE("u-ring: F2[x,y]/(x,y)^2 is covered by three principal ideals") {
  auto r = test_util::f2xy_square();
  auto v = u_ring_violation(r);
  REQUIRE(v.has_value());
  CHECK(v->covered == named(r, {"x", "y"}));
  REQUIRE(v->cover.size() == 3);
  CHECK(v->cover[0] == named(r, {"x"}));
  CHECK(v->cover[1] == named(r, {"y"}));
  CHECK(v->cover[2] == named(r, {"x+y"}));
  CHECK_FALSE(oracle::is_u_ring_exhaustive(r));
}

TEST_CASE("u-ring: Z_n, cross-checked against subfamily enumeration") {
  for (unsigned n = 2; n <= 60; ++n) {
    auto r = mk_zn(n);
    CHECK(is_u_ring(r));
    if (n <= 16) CHECK(oracle::is_u_ring_exhaustive(r));
  }
  for (auto r : {mk_product({mk_zn(2), mk_zn(2)}), mk_product({mk_zn(2), mk_zn(2), mk_zn(2)}),
                 mk_idealization(4, 1), mk_idealization(4, 2), mk_product({mk_zn(2), mk_zn(4)})}) {
    CHECK(is_u_ring(r) == oracle::is_u_ring_exhaustive(r));
  }
}

TEST_CASE("irreducible elements") {
  CHECK(irreducible_elements(*mk_zn(4)).to_vector() == std::vector<Elem>{2});
  CHECK(irreducible_elements(*mk_zn(6)).empty());
  CHECK(irreducible_elements(*mk_zn(7)).empty());
}

TEST_CASE("radical and residual invariants") {
  for (auto r : sample_rings()) {
    auto ids = all_ideals(r);
    for (const auto& i : ids) {
      auto ri = radical(i);
      CHECK(radical(ri) == ri);
      CHECK(i.is_subset_of(ri));
      CHECK(residual(i, unit_ideal(r)) == i);
      for (std::size_t x = 0; x < r->order(); ++x) {
        CHECK(ri.contains(static_cast<Elem>(x)) == oracle::in_radical(i, static_cast<Elem>(x)));
      }
      for (const auto& j : ids) {
        CHECK(radical(ideal_intersection(i, j)) == ideal_intersection(ri, radical(j)));
        CHECK(i.is_subset_of(residual(i, j)));
        auto p = ideal_product(i, j);
        CHECK(p.is_subset_of(ideal_intersection(i, j)));
      }
      CHECK(ideal_power(i, 3) == ideal_product(ideal_product(i, i), i));
    }
    for (std::size_t x = 0; x < r->order(); ++x)
      CHECK(annihilator(r, static_cast<Elem>(x)) ==
            residual(zero_ideal(r), principal_ideal(r, static_cast<Elem>(x))));
  }
}

TEST_CASE("ideal list is closed under the ideal operations") {
  for (auto r : sample_rings()) {
    auto ids = all_ideals(r);
    auto known = [&](const Ideal& x) {
      for (const auto& y : ids)
        if (y == x) return true;
      return false;
    };
    for (const auto& i : ids) {
      CHECK(known(radical(i)));
      for (const auto& j : ids) {
        CHECK(known(ideal_sum(i, j)));
        CHECK(known(ideal_intersection(i, j)));
        CHECK(known(ideal_product(i, j)));
        CHECK(known(residual(i, j)));
      }
    }
  }
}

TEST_CASE("vnr implies reduced, chained implies divided") {
  for (auto r : sample_rings()) {
    if (is_vnr(*r)) CHECK(is_reduced(*r));
    if (is_chained(*r)) CHECK(is_divided(r));
  }
}
