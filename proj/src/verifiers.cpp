#include <algorithm>
#include <stdexcept>

#include "ringlab/constructions.hpp"
#include "suite_internal.hpp"

namespace ringlab::detail {

namespace {

using P = Property;
constexpr P kW1AP = P::WeaklyOneAbsorbingPrimary;
constexpr P k1AP = P::OneAbsorbingPrimary;

Violation viol(std::vector<std::string> ideals, std::vector<std::string> witness,
               std::string detail, bool replayed) {
  Violation v;
  v.ideals = std::move(ideals);
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  v.replayed = replayed;
  return v;
}

std::string tf(bool b) { return b ? "true" : "false"; }
std::string pname(P p) { return std::string(property_name(p)); }

/// Independent maximality test: R/A is a field iff every x outside A has
/// some y with xy - 1 in A.
bool literal_maximal(const FiniteRing& r, const ElemSet& a) {
  if (a.contains(r.one())) return false;
  for (std::size_t x = 0; x < r.order(); ++x) {
    if (a.contains(x)) continue;
    bool inv = false;
    for (std::size_t y = 0; y < r.order() && !inv; ++y)
      inv = a.contains(r.sub(r.mul(static_cast<Elem>(x), static_cast<Elem>(y)), r.one()));
    if (!inv) return false;
  }
  return true;
}

ElemSet literal_ann(const FiniteRing& r, Elem x) {
  ElemSet s(r.order());
  for (std::size_t y = 0; y < r.order(); ++y)
    if (r.mul(x, static_cast<Elem>(y)) == r.zero()) s.insert(y);
  return s;
}

bool literal_in_radical(const Ideal& i, Elem x) { return oracle::in_radical(i, x); }

/// Every proper ideal of a small auxiliary ring, with weak 1-absorbing
/// primality decided by the optimized scan.
struct AuxRing {
  RingPtr r;
  std::vector<Ideal> proper;
  std::vector<bool> w1ap;
  explicit AuxRing(RingPtr ring, const Limits& limits) : r(std::move(ring)) {
    for (auto& i : all_ideals(r, limits))
      if (i.is_proper()) {
        proper.push_back(i);
        w1ap.push_back(check_property(i, kW1AP).holds);
      }
  }
};

// ---------------------------------------------------------------------------

void verify_tr(const RingAnalysis& a, Acc& acc) {
  const bool local_nil = a.quasilocal && a.is_maximal(a.nil_idx);
  for (auto k : a.proper()) {
    const Ideal& I = a.ideal(k);
    auto implication = [&](std::size_t part, P from, P to) {
      if (!a.holds(k, from)) {
        acc.skip(part);
        return;
      }
      acc.inst(part);
      if (a.holds(k, to)) return;
      bool rep = a.oracle_holds(I, from) && !a.oracle_holds(I, to);
      acc.violation(part, viol({a.ideal_text(k)}, a.names(a.rec(k)[to].witness),
                               pname(from) + " holds but " + pname(to) + " fails", rep));
    };
    implication(0, P::WeaklyPrime, kW1AP);
    implication(1, P::WeaklyPrimary, kW1AP);
    implication(2, k1AP, kW1AP);
    implication(3, kW1AP, P::WeaklyTwoAbsorbingPrimary);
    if (a.domain) {
      acc.inst(4);
      if (a.w1ap(k) != a.holds(k, k1AP)) {
        bool rep = a.oracle_holds(I, kW1AP) != a.oracle_holds(I, k1AP);
        acc.violation(4, viol({a.ideal_text(k)}, {},
                              "weakly_1AP=" + tf(a.w1ap(k)) + " 1AP=" + tf(a.holds(k, k1AP)),
                              rep));
      }
    } else {
      acc.skip(4);
    }
    if (local_nil) {
      acc.inst(5);
      if (!a.w1ap(k))
        acc.violation(5, viol({a.ideal_text(k)}, a.names(a.rec(k)[kW1AP].witness),
                              "maximal ideal is the nilradical but I is not weakly 1AP",
                              !a.oracle_holds(I, kW1AP)));
    } else {
      acc.skip(5);
    }
  }
}

void verify_max(const RingAnalysis& a, Acc& acc) {
  for (auto k : a.proper()) {
    if (!a.w1ap(k) || !a.is_maximal(a.rad(k))) {
      acc.skip(0);
      continue;
    }
    acc.inst(0);
    if (a.holds(k, P::Primary) && a.holds(k, k1AP)) continue;
    const Ideal& I = a.ideal(k);
    bool rep = a.oracle_holds(I, kW1AP) &&
               literal_maximal(a.R(), a.ideal(a.rad(k)).members()) &&
               !(a.oracle_holds(I, P::Primary) && a.oracle_holds(I, k1AP));
    acc.violation(0, viol({a.ideal_text(k)}, a.names(a.rec(k)[P::Primary].witness),
                          "sqrt(I) maximal but I not primary", rep));
  }
}

void verify_rad(const RingAnalysis& a, Acc& acc) {
  for (auto k : a.proper()) {
    if (!a.reduced || k == a.zero_idx() || !a.w1ap(k)) {
      acc.skip(0);
      acc.skip(1);
      continue;
    }
    const Ideal& I = a.ideal(k);
    acc.inst(0);
    if (!a.is_prime(a.rad(k))) {
      const Ideal& rad = a.ideal(a.rad(k));
      bool rep = a.oracle_holds(I, kW1AP) && !a.oracle_holds(rad, P::Prime);
      acc.violation(0, viol({a.ideal_text(k), a.ideal_text(rad)},
                            a.names(oracle::check(rad, P::Prime).witness),
                            "sqrt(I) is not prime", rep));
    }
    if (!a.is_maximal(a.rad(k))) {
      acc.skip(1);
      continue;
    }
    acc.inst(1);
    if (!(a.holds(k, P::Primary) && a.holds(k, k1AP))) {
      bool rep = !(a.oracle_holds(I, P::Primary) && a.oracle_holds(I, k1AP));
      acc.violation(1, viol({a.ideal_text(k)}, a.names(a.rec(k)[P::Primary].witness),
                            "sqrt(I) maximal but I not primary", rep));
    }
  }
}

void verify_vni(const RingAnalysis& a, Acc& acc) {
  for (auto k : a.proper()) {
    if (!a.vnr || k == a.zero_idx()) {
      acc.skip(0);
      continue;
    }
    acc.inst(0);
    const bool w = a.w1ap(k), p = a.holds(k, P::Primary), o = a.holds(k, k1AP);
    if (w == p && p == o) continue;
    const Ideal& I = a.ideal(k);
    const bool ow = a.oracle_holds(I, kW1AP), op = a.oracle_holds(I, P::Primary),
               oo = a.oracle_holds(I, k1AP);
    acc.violation(0, viol({a.ideal_text(k)}, {},
                          "weakly_1AP=" + tf(w) + " primary=" + tf(p) + " 1AP=" + tf(o),
                          !(ow == op && op == oo)));
  }
}

std::vector<bool> ann_is_maximal(const RingAnalysis& a) {
  const auto& scan = a.scan(a.zero_idx());
  std::vector<bool> out(a.R().order());
  for (std::size_t x = 0; x < a.R().order(); ++x)
    out[x] = a.is_maximal(a.index(scan.ann(static_cast<Elem>(x))));
  return out;
}

void verify_nq(const RingAnalysis& a, Acc& acc) {
  if (a.quasilocal) {
    acc.skip(0, a.proper().size());
    return;
  }
  const auto annmax = ann_is_maximal(a);
  for (auto k : a.proper()) {
    bool hyp = true;
    a.ideal(k).members().for_each([&](Elem i) { hyp = hyp && !annmax[i]; });
    if (!hyp) {
      acc.skip(0);
      continue;
    }
    acc.inst(0);
    if (a.w1ap(k) == a.holds(k, P::WeaklyPrimary)) continue;
    const Ideal& I = a.ideal(k);
    bool rep = a.oracle_holds(I, kW1AP) != a.oracle_holds(I, P::WeaklyPrimary);
    I.members().for_each(
        [&](Elem i) { rep = rep && !literal_maximal(a.R(), literal_ann(a.R(), i)); });
    acc.violation(0, viol({a.ideal_text(k)}, a.names(a.rec(k)[P::WeaklyPrimary].witness),
                          "no ann(i) maximal; weakly_1AP=" + tf(a.w1ap(k)) +
                              " weakly_primary=" + tf(a.holds(k, P::WeaklyPrimary)),
                          rep));
  }
}

void verify_nounit(const RingAnalysis& a, Acc& acc) {
  const auto& r = a.R();
  // nonunits w with w + u a nonunit for some unit u
  ElemSet w_ok(r.order());
  for (auto w : r.nonunit_list())
    r.units().for_each([&](Elem u) {
      if (!r.is_unit(r.add(w, u))) w_ok.insert(w);
    });
  for (auto k : a.proper()) {
    const Ideal& I = a.ideal(k);
    bool hyp = a.w1ap(k);
    I.members().for_each([&](Elem i) {
      if (!hyp || i == r.zero()) return;
      bool found = false;
      w_ok.for_each([&](Elem w) { found = found || r.mul(w, i) != r.zero(); });
      hyp = found;
    });
    if (!hyp) {
      acc.skip(0);
      continue;
    }
    acc.inst(0);
    if (a.holds(k, P::WeaklyPrimary)) continue;
    bool rep = a.oracle_holds(I, kW1AP) && !a.oracle_holds(I, P::WeaklyPrimary);
    acc.violation(0, viol({a.ideal_text(k)}, a.names(a.rec(k)[P::WeaklyPrimary].witness),
                          "hypothesis holds but I is not weakly primary", rep));
  }
}

void verify_d(const RingAnalysis& a, Acc& acc) {
  for (std::size_t part : {0u, 1u}) {
    const bool hyp = a.reduced && (part == 0 ? a.divided : a.chained);
    for (auto k : a.proper()) {
      if (!hyp) {
        acc.skip(part);
        continue;
      }
      acc.inst(part);
      if (a.w1ap(k) == a.holds(k, P::WeaklyPrimary)) continue;
      const Ideal& I = a.ideal(k);
      acc.violation(part, viol({a.ideal_text(k)}, {},
                               "weakly_1AP=" + tf(a.w1ap(k)) +
                                   " weakly_primary=" + tf(a.holds(k, P::WeaklyPrimary)),
                               a.oracle_holds(I, kW1AP) != a.oracle_holds(I, P::WeaklyPrimary)));
    }
  }
}

// ---------------------------------------------------------------------------
// u-ring characterization

struct ChConditions {
  bool c[5];
  std::string first_failure[5];
};

/// Conditions (2)-(5) for ideal k. `proper_only` restricts the ideal
/// variables I1, I2, I3 to proper ideals.
ChConditions ch_conditions(const RingAnalysis& a, std::size_t k, bool proper_only,
                           const std::vector<std::vector<std::size_t>>& scale,
                           const std::vector<std::size_t>& ann_of) {
  const auto& r = a.R();
  const auto& scan = a.scan(k);
  const Ideal& I = a.ideal(k);
  const ElemSet& rad = a.ideal(a.rad(k)).members();
  const std::size_t N = a.count();
  std::vector<std::size_t> vars;
  for (std::size_t j = 0; j < N; ++j)
    if (!proper_only || j != a.whole_idx()) vars.push_back(j);
  std::vector<std::size_t> res(N);  // (I:K)
  for (std::size_t j = 0; j < N; ++j) res[j] = a.index(residual(I, a.ideal(j)));

  ChConditions out{};
  for (auto& b : out.c) b = true;
  out.c[0] = a.w1ap(k);

  // (2) depends on (a,b) only through p = ab
  ElemSet done(r.order());
  for (auto x : r.nonunit_list())
    for (auto y : r.nonunit_list()) {
      const Elem p = r.mul(x, y);
      if (I.contains(p) || done.contains(p)) continue;
      done.insert(p);
      const ElemSet& col = scan.mul_in(p);
      if (!(col == scan.ann(p) || col.is_subset_of(rad))) {
        out.c[1] = false;
        out.first_failure[1] = "a=" + r.name(x) + " b=" + r.name(y);
        goto cond3;
      }
    }
cond3:
  for (auto x : r.nonunit_list()) {
    for (auto j1 : vars) {
      if (a.ideal(j1).members().is_subset_of(rad)) continue;
      const std::size_t kk = scale[x][j1];
      const std::size_t col = res[kk];
      if (col == a.whole_idx()) continue;
      if (col == ann_of[kk] || a.ideal(col).members().is_subset_of(scan.mul_in(x))) continue;
      out.c[2] = false;
      out.first_failure[2] = "a=" + r.name(x) + " I1=" + a.ideal_text(j1);
      goto cond4;
    }
  }
cond4:
  for (auto j1 : vars) {
    if (a.ideal(j1).members().is_subset_of(rad)) continue;
    for (auto j2 : vars) {
      const std::size_t kk = a.product(j1, j2);
      const std::size_t col = res[kk];
      if (col == a.whole_idx()) continue;
      if (col == ann_of[kk] || a.subset(col, res[j2])) continue;
      out.c[3] = false;
      out.first_failure[3] = "I1=" + a.ideal_text(j1) + " I2=" + a.ideal_text(j2);
      goto cond5;
    }
  }
cond5:
  for (auto j1 : vars)
    for (auto j2 : vars) {
      const std::size_t p12 = a.product(j1, j2);
      for (auto j3 : vars) {
        const std::size_t p = a.product(p12, j3);
        if (p == a.zero_idx() || !a.subset(p, k)) continue;
        if (a.subset(p12, k) || a.subset(j3, a.rad(k))) continue;
        out.c[4] = false;
        out.first_failure[4] =
            "I1=" + a.ideal_text(j1) + " I2=" + a.ideal_text(j2) + " I3=" + a.ideal_text(j3);
        return out;
      }
    }
  return out;
}

void verify_ch(const RingAnalysis& a, Acc& acc) {
  if (!a.u_ring) {
    acc.skip(0, a.proper().size());
    return;
  }
  const auto& r = a.R();
  const std::size_t N = a.count();
  std::vector<std::vector<std::size_t>> scale(r.order(), std::vector<std::size_t>(N));
  for (std::size_t x = 0; x < r.order(); ++x)
    for (std::size_t j = 0; j < N; ++j)
      scale[x][j] = a.index(ideal_scale(static_cast<Elem>(x), a.ideal(j)));
  std::vector<std::size_t> ann_of(N);
  for (std::size_t j = 0; j < N; ++j)
    ann_of[j] = a.index(residual(zero_ideal(a.ring()), a.ideal(j)));

  for (auto k : a.proper()) {
    acc.inst(0);
    auto c = ch_conditions(a, k, true, scale, ann_of);
    const bool all_equal = std::all_of(std::begin(c.c), std::end(c.c),
                                       [&](bool b) { return b == c.c[0]; });
    if (!all_equal) {
      std::string detail;
      std::vector<std::string> wit;
      for (int m = 0; m < 5; ++m) {
        detail += (m ? " " : "") + std::string("(") + std::to_string(m + 1) + ")=" + tf(c.c[m]);
        if (!c.c[m] && m > 0) wit.push_back("(" + std::to_string(m + 1) + ") " + c.first_failure[m]);
      }
      bool rep = a.oracle_holds(a.ideal(k), kW1AP) == c.c[0];
      acc.violation(0, viol({a.ideal_text(k)}, wit, detail, rep));
      acc.note("pattern " + detail, a.spec() + " I=" + a.ideal_text(k));
    }
    auto lit = ch_conditions(a, k, false, scale, ann_of);
    if (!std::all_of(std::begin(lit.c), std::end(lit.c), [&](bool b) { return b == lit.c[0]; }))
      acc.note("ideal variables ranging over all ideals: conditions still disagree",
               a.spec() + " I=" + a.ideal_text(k));
    for (int m = 2; m < 5; ++m)
      if (lit.c[m] != c.c[m])
        acc.note("ideal variables ranging over all ideals change condition (" +
                     std::to_string(m + 1) + ")",
                 a.spec() + " I=" + a.ideal_text(k) + " " + lit.first_failure[m]);
  }
}

// ---------------------------------------------------------------------------

void verify_abi(const RingAnalysis& a, Acc& acc) {
  const auto& r = a.R();
  const auto z = zero_ideal(a.ring());
  for (auto k : a.proper()) {
    if (!a.w1ap(k)) {
      for (std::size_t p = 0; p < 5; ++p) acc.skip(p);
      continue;
    }
    const Ideal& I = a.ideal(k);
    const std::size_t sq = a.product(k, k), cube = a.product(sq, k);
    const ElemSet ann_i = residual(z, I).members();
    const ElemSet ann_sq = residual(z, a.ideal(sq)).members();
    const bool not_1ap = !a.holds(k, k1AP);
    std::size_t found = 0;
    for_each_triple_zero(a.scan(k), [&](const TripleZero& t) {
      ++found;
      const Elem ab = r.mul(t.a, t.b), ac = r.mul(t.a, t.c), bc = r.mul(t.b, t.c);
      const auto wit = a.names({t.a, t.b, t.c});
      // literal replays
      auto kills_i = [&](Elem x) {
        bool ok = true;
        I.members().for_each([&](Elem y) { ok = ok && r.mul(x, y) == r.zero(); });
        return ok;
      };
      auto kills_sq = [&](Elem x) {
        bool ok = true;
        I.members().for_each([&](Elem y) {
          I.members().for_each([&](Elem w) { ok = ok && r.mul(r.mul(x, y), w) == r.zero(); });
        });
        return ok;
      };
      acc.inst(0);
      if (!ann_i.contains(ab))
        acc.violation(0, viol({a.ideal_text(k)}, wit, "abI != 0",
                              a.oracle_holds(I, kW1AP) && !kills_i(ab)));
      const bool split = !I.contains(ac) && !I.contains(bc);
      if (split) {
        acc.inst(1);
        acc.inst(2);
        const bool ok2 = ann_i.contains(bc) && ann_i.contains(ac) && ann_sq.contains(t.a) &&
                         ann_sq.contains(t.b) && ann_sq.contains(t.c);
        if (!ok2)
          acc.violation(1, viol({a.ideal_text(k)}, wit, "one of bcI, acI, aI^2, bI^2, cI^2 is nonzero",
                                a.oracle_holds(I, kW1AP) &&
                                    !(kills_i(bc) && kills_i(ac) && kills_sq(t.a) &&
                                      kills_sq(t.b) && kills_sq(t.c))));
        if (cube != a.zero_idx())
          acc.violation(2, viol({a.ideal_text(k)}, wit, "I^3 != 0", a.oracle_holds(I, kW1AP)));
      } else {
        acc.skip(1);
        acc.skip(2);
      }
      if (a.reduced && not_1ap && split) {
        acc.inst(3);
        if (k != a.zero_idx())
          acc.violation(3, viol({a.ideal_text(k)}, wit, "reduced ring, I != 0",
                                a.oracle_holds(I, kW1AP) && !a.oracle_holds(I, k1AP)));
      } else {
        acc.skip(3);
      }
      if (a.reduced && not_1ap && k != a.zero_idx()) {
        acc.inst(4);
        if (!I.contains(ac) && !I.contains(bc))
          acc.violation(4, viol({a.ideal_text(k)}, wit, "neither ac nor bc in I",
                                a.oracle_holds(I, kW1AP) && !a.oracle_holds(I, k1AP)));
      } else {
        acc.skip(4);
      }
      return true;
    });
    if (found == 0)
      for (std::size_t p = 0; p < 5; ++p) acc.skip(p);
  }
}

void verify_irreducible(const RingAnalysis& a, Acc& acc) {
  const auto& r = a.R();
  const ElemSet irr = irreducible_elements(r);
  auto literal_irreducible = [&](Elem x) {
    if (r.is_unit(x)) return false;
    for (auto c : r.nonunit_list())
      for (auto d : r.nonunit_list())
        if (r.mul(c, d) == x) return false;
    return true;
  };
  for (auto k : a.proper()) {
    if (!a.w1ap(k) || a.holds(k, P::WeaklyPrimary)) {
      acc.skip(0);
      acc.skip(1);
      continue;
    }
    const Ideal& I = a.ideal(k);
    const ElemSet& rad = a.ideal(a.rad(k)).members();
    acc.inst(0);
    bool exists = false;
    for (auto x : r.nonunit_list()) {
      if (!irr.contains(x) || I.contains(x)) continue;
      for (auto y : r.nonunit_list()) {
        const Elem p = r.mul(x, y);
        if (p != r.zero() && I.contains(p) && !rad.contains(y)) exists = true;
      }
    }
    if (!exists)
      acc.violation(0, viol({a.ideal_text(k)}, {}, "no irreducible x with 0 != xy in I",
                            a.oracle_holds(I, kW1AP) && !a.oracle_holds(I, P::WeaklyPrimary)));
    for (auto x : r.nonunit_list())
      for (auto y : r.nonunit_list()) {
        const Elem p = r.mul(x, y);
        if (p == r.zero() || !I.contains(p) || I.contains(x) || rad.contains(y)) continue;
        acc.inst(1);
        if (!irr.contains(x))
          acc.violation(1, viol({a.ideal_text(k)}, a.names({x, y}), "a is not irreducible",
                                !literal_irreducible(x) && !literal_in_radical(I, y)));
      }
  }
}

void verify_intersection(const RingAnalysis& a, Acc& acc) {
  std::vector<std::size_t> w;
  for (auto k : a.proper())
    if (a.w1ap(k)) w.push_back(k);
  auto meet = [&](std::initializer_list<std::size_t> ks) {
    ElemSet s = a.ideal(*ks.begin()).members();
    for (auto k : ks) s &= a.ideal(k).members();
    return a.index(s);
  };
  for (std::size_t x = 0; x < w.size(); ++x)
    for (std::size_t y = x + 1; y < w.size(); ++y) {
      const std::size_t m = meet({w[x], w[y]});
      if (a.rad(w[x]) != a.rad(w[y])) {
        acc.skip(0);
        if (!a.w1ap(m))
          acc.note("distinct radicals, intersection not weakly 1AP",
                   a.spec() + " " + a.ideal_text(w[x]) + " cap " + a.ideal_text(w[y]));
        continue;
      }
      acc.inst(0);
      if (!a.w1ap(m))
        acc.violation(0, viol({a.ideal_text(w[x]), a.ideal_text(w[y]), a.ideal_text(m)},
                              a.names(a.rec(m)[kW1AP].witness), "intersection not weakly 1AP",
                              !a.oracle_holds(a.ideal(m), kW1AP)));
      for (std::size_t z = y + 1; z < w.size(); ++z) {
        if (a.rad(w[z]) != a.rad(w[x])) {
          acc.skip(1);
          continue;
        }
        acc.inst(1);
        const std::size_t m3 = meet({w[x], w[y], w[z]});
        if (!a.w1ap(m3))
          acc.violation(1, viol({a.ideal_text(w[x]), a.ideal_text(w[y]), a.ideal_text(w[z])},
                                a.names(a.rec(m3)[kW1AP].witness), "intersection not weakly 1AP",
                                !a.oracle_holds(a.ideal(m3), kW1AP)));
      }
    }
}

void verify_residual(const RingAnalysis& a, Acc& acc) {
  const auto& r = a.R();
  for (auto k : a.proper()) {
    if (!a.w1ap(k)) {
      acc.skip(0);
      continue;
    }
    const Ideal& I = a.ideal(k);
    for (auto c : r.nonunit_list()) {
      if (I.contains(c)) continue;
      acc.inst(0);
      const std::size_t q = a.index(a.scan(k).mul_in(c));
      if (a.holds(q, P::WeaklyPrimary)) continue;
      const auto& wit = a.rec(q)[P::WeaklyPrimary].witness;
      const Elem x = wit[0], y = wit[1];
      const bool abc_zero = r.mul(r.mul(x, y), c) == r.zero();
      // literal (I:c)
      ElemSet lit(r.order());
      for (std::size_t t = 0; t < r.order(); ++t)
        if (I.contains(r.mul(static_cast<Elem>(t), c))) lit.insert(t);
      const Ideal Q(a.ring(), lit);
      const bool rep = a.oracle_holds(I, kW1AP) && !a.oracle_holds(Q, P::WeaklyPrimary);
      acc.violation(0, viol({a.ideal_text(k), a.ideal_text(q)},
                            {"c=" + r.name(c), "a=" + r.name(x), "b=" + r.name(y)},
                            std::string("(I:c) not weakly primary; abc ") +
                                (abc_zero ? "= 0" : "!= 0"),
                            rep));
      if (abc_zero)
        acc.note("violations with abc = 0", a.spec() + " I=" + a.ideal_text(k) + " c=" + r.name(c));
      // Variant with the extra guard 0 != abc on the residual pair.
      bool guarded_ok = true;
      const ElemSet& qm = a.ideal(q).members();
      const ElemSet& qrad = a.ideal(a.rad(q)).members();
      for (std::size_t s = 0; s < r.order() && guarded_ok; ++s)
        for (std::size_t t = 0; t < r.order() && guarded_ok; ++t) {
          const Elem st = r.mul(static_cast<Elem>(s), static_cast<Elem>(t));
          if (st == r.zero() || !qm.contains(st) || r.mul(st, c) == r.zero()) continue;
          guarded_ok = qm.contains(s) || qrad.contains(t);
        }
      if (!guarded_ok)
        acc.note("guarded variant (0 != abc) fails", a.spec() + " I=" + a.ideal_text(k) +
                                                          " c=" + r.name(c));
    }
  }
}

// ---------------------------------------------------------------------------
// products

Ideal project(const RingAnalysis& a, std::size_t k, std::size_t factor) {
  const auto& f = a.R().structure().factors[factor];
  ElemSet s(f->order());
  a.ideal(k).members().for_each([&](Elem x) { s.insert(a.R().decode(x)[factor]); });
  return Ideal(f, std::move(s));
}

void verify_w1(const RingAnalysis& a, Acc& acc) {
  const auto& st = a.R().structure();
  const bool hyp_ring = st.kind == RingStructure::Kind::Product && st.factors.size() == 2 &&
                        !is_field(*st.factors[0]) && !is_field(*st.factors[1]);
  for (auto k : a.proper()) {
    if (!hyp_ring || k == a.zero_idx()) {
      acc.skip(0);
      continue;
    }
    acc.inst(0);
    const Ideal i1 = project(a, k, 0), i2 = project(a, k, 1);
    const bool c2 = (i2.is_whole() && i1.is_proper() && check_property(i1, P::Primary).holds) ||
                    (i1.is_whole() && i2.is_proper() && check_property(i2, P::Primary).holds);
    const bool c1 = a.w1ap(k), c3 = a.holds(k, k1AP), c4 = a.holds(k, P::Primary);
    if (c1 == c2 && c2 == c3 && c3 == c4) continue;
    const Ideal& I = a.ideal(k);
    const bool o2 = (i2.is_whole() && i1.is_proper() && oracle::check(i1, P::Primary).holds) ||
                    (i1.is_whole() && i2.is_proper() && oracle::check(i2, P::Primary).holds);
    const bool o1 = a.oracle_holds(I, kW1AP), o3 = a.oracle_holds(I, k1AP),
               o4 = a.oracle_holds(I, P::Primary);
    acc.violation(0, viol({a.ideal_text(k)}, {},
                          "(1)=" + tf(c1) + " (2)=" + tf(c2) + " (3)=" + tf(c3) + " (4)=" + tf(c4),
                          !(o1 == o2 && o2 == o3 && o3 == o4)));
  }
}

void verify_fi(const RingAnalysis& a, Acc& acc) {
  const auto& st = a.R().structure();
  if (st.kind != RingStructure::Kind::Product) {
    acc.skip(0);
    acc.skip(1);
    return;
  }
  bool all_w1ap = true, all_wp = true;
  for (auto k : a.proper()) {
    all_w1ap = all_w1ap && a.w1ap(k);
    all_wp = all_wp && a.holds(k, P::WeaklyPrimary);
  }
  const bool fields2 = st.factors.size() == 2 && is_field(*st.factors[0]) && is_field(*st.factors[1]);
  auto oracle_all = [&](P p) {
    for (auto k : a.proper())
      if (!a.oracle_holds(a.ideal(k), p)) return false;
    return true;
  };
  acc.inst(0);
  if (all_w1ap != fields2)
    acc.violation(0, viol({}, {}, "every proper ideal weakly 1AP: " + tf(all_w1ap) +
                                      "; two field factors: " + tf(fields2),
                          oracle_all(kW1AP) != fields2));
  acc.inst(1);
  const bool c3 = fields2 && a.vnr;
  if (!(all_w1ap == all_wp && all_wp == c3)) {
    const bool o1 = oracle_all(kW1AP), o2 = oracle_all(P::WeaklyPrimary);
    acc.violation(1, viol({}, {}, "(1)=" + tf(all_w1ap) + " (2)=" + tf(all_wp) + " (3)=" + tf(c3),
                          !(o1 == o2 && o2 == c3)));
  }
}

// ---------------------------------------------------------------------------
// homomorphisms

struct NamedHom {
  std::string name;
  RingHom f;
};

std::vector<NamedHom> hom_family(const RingAnalysis& a) {
  const auto& r = a.ring();
  const auto& st = r->structure();
  std::vector<NamedHom> out;
  std::vector<Elem> id(r->order());
  for (std::size_t x = 0; x < r->order(); ++x) id[x] = static_cast<Elem>(x);
  out.push_back({"identity", RingHom{r, r, id}});
  for (auto k : a.proper()) {
    if (k == a.zero_idx()) continue;
    auto [q, pi] = mk_quotient(a.ideal(k), a.limits());
    out.push_back({"projection onto quot by " + a.ideal_text(k), pi});
  }
  if (st.kind == RingStructure::Kind::Product)
    for (std::size_t i = 0; i < st.factors.size(); ++i) {
      RingHom f{r, st.factors[i], {}};
      for (std::size_t x = 0; x < r->order(); ++x) f.map.push_back(r->decode(static_cast<Elem>(x))[i]);
      out.push_back({"projection to factor " + std::to_string(i + 1), f});
    }
  if (st.kind == RingStructure::Kind::Idealization) {
    const unsigned m = st.n / st.d;
    auto zn = mk_zn(st.n, a.limits());
    RingHom proj{r, zn, {}}, incl{zn, r, {}};
    for (std::size_t x = 0; x < r->order(); ++x) proj.map.push_back(static_cast<Elem>(x / m));
    for (unsigned x = 0; x < st.n; ++x) incl.map.push_back(static_cast<Elem>(x * m));
    out.push_back({"(a,m) -> a", proj});
    out.push_back({"a -> (a,0)", incl});
  }
  if (st.kind == RingStructure::Kind::Zn && st.n <= 16) {
    auto sq = mk_product({r, r}, a.limits());
    RingHom diag{r, sq, {}};
    for (std::size_t x = 0; x < r->order(); ++x)
      diag.map.push_back(sq->encode({static_cast<Elem>(x), static_cast<Elem>(x)}));
    out.push_back({"diagonal", diag});
  }
  return out;
}

void verify_f(const RingAnalysis& a, Acc& acc) {
  for (const auto& h : hom_family(a)) {
    const auto& f = h.f;
    auto chk = hom_check(f);
    if (!chk.ok) throw std::logic_error("generated map is not a homomorphism: " + h.name);
    // (1) monomorphisms that keep nonunits nonunits
    if (f.injective() && f.preserves_nonunits()) {
      const bool codomain_is_r = f.codomain.get() == a.ring().get();
      std::optional<AuxRing> aux;
      if (!codomain_is_r) aux.emplace(f.codomain, a.limits());
      const std::size_t nj = codomain_is_r ? a.proper().size() : aux->proper.size();
      for (std::size_t t = 0; t < nj; ++t) {
        const Ideal& J = codomain_is_r ? a.ideal(a.proper()[t]) : aux->proper[t];
        const bool jw = codomain_is_r ? a.w1ap(a.proper()[t]) : aux->w1ap[t];
        if (!jw) {
          acc.skip(0);
          continue;
        }
        acc.inst(0);
        const Ideal pre = hom_preimage_ideal(f, J);
        const bool pre_w = f.domain.get() == a.ring().get() ? a.w1ap(a.index(pre))
                                                            : check_property(pre, kW1AP).holds;
        if (!pre_w)
          acc.violation(0, viol({format_set(*f.codomain, J.members()), format_set(*f.domain, pre.members())},
                                {h.name}, "preimage not weakly 1AP",
                                oracle::check(J, kW1AP).holds && !oracle::check(pre, kW1AP).holds));
      }
    } else {
      acc.skip(0);
      if (f.injective() && !f.preserves_nonunits())
        acc.note("map sends a nonunit to a unit; excluded from the monomorphism part",
                 a.spec() + " " + h.name);
    }
    // (2) epimorphisms, kernel inside I
    if (!f.surjective()) continue;
    const ElemSet ker = f.kernel();
    std::map<std::vector<Elem>, bool> img_cache;
    for (auto k : a.proper()) {
      if (!a.w1ap(k) || !ker.is_subset_of(a.ideal(k).members())) {
        acc.skip(1);
        continue;
      }
      acc.inst(1);
      const Ideal img = hom_image_ideal(f, a.ideal(k));
      if (!img.is_proper()) {
        acc.violation(1, viol({a.ideal_text(k)}, {h.name}, "image is the whole ring", true));
        continue;
      }
      auto key = img.elements();
      auto it = img_cache.find(key);
      if (it == img_cache.end()) it = img_cache.emplace(key, check_property(img, kW1AP).holds).first;
      if (!it->second)
        acc.violation(1, viol({a.ideal_text(k), format_set(*f.codomain, img.members())}, {h.name},
                              "image not weakly 1AP",
                              a.oracle_holds(a.ideal(k), kW1AP) && !oracle::check(img, kW1AP).holds));
    }
  }
}

void verify_quotient(const RingAnalysis& a, Acc& acc) {
  const auto& r = a.R();
  // (3)
  const bool zero_1ap = a.holds(a.zero_idx(), k1AP);
  for (auto k : a.proper()) {
    if (!zero_1ap || !a.w1ap(k)) {
      acc.skip(2);
      continue;
    }
    acc.inst(2);
    if (!a.holds(k, k1AP))
      acc.violation(2, viol({a.ideal_text(k)}, a.names(a.rec(k)[k1AP].witness),
                            "(0) 1AP and I weakly 1AP but I not 1AP",
                            a.oracle_holds(a.ideal(a.zero_idx()), k1AP) &&
                                !a.oracle_holds(a.ideal(k), k1AP)));
  }
  for (auto j : a.proper()) {
    auto [q, pi] = mk_quotient(a.ideal(j), a.limits());
    ElemSet unit_images(q->order());
    r.units().for_each([&](Elem u) { unit_images.insert(pi(u)); });
    const bool units_hyp = unit_images == q->units();
    if (!units_hyp) acc.note("U(R/J) larger than the image of U(R)", a.spec() + " J=" + a.ideal_text(j));
    std::map<std::vector<Elem>, bool> cache;
    for (auto k : a.proper()) {
      if (!a.subset(j, k)) continue;
      const Ideal ij = hom_image_ideal(pi, a.ideal(k));
      auto key = ij.elements();
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, check_property(ij, kW1AP).holds).first;
      const bool ij_w = it->second;
      const auto ideals = std::vector<std::string>{a.ideal_text(k), a.ideal_text(j)};
      // (1)
      if (a.w1ap(k)) {
        acc.inst(0);
        if (!ij_w)
          acc.violation(0, viol(ideals, {}, "I/J not weakly 1AP in R/J",
                                a.oracle_holds(a.ideal(k), kW1AP) && !oracle::check(ij, kW1AP).holds));
      } else {
        acc.skip(0);
      }
      // (2)
      if (units_hyp && a.holds(j, k1AP) && ij_w) {
        acc.inst(1);
        if (!a.holds(k, k1AP))
          acc.violation(1, viol(ideals, a.names(a.rec(k)[k1AP].witness), "I not 1AP",
                                a.oracle_holds(a.ideal(j), k1AP) && oracle::check(ij, kW1AP).holds &&
                                    !a.oracle_holds(a.ideal(k), k1AP)));
      } else {
        acc.skip(1);
      }
      // (4)
      if (units_hyp && a.w1ap(j) && ij_w) {
        acc.inst(3);
        if (!a.w1ap(k))
          acc.violation(3, viol(ideals, a.names(a.rec(k)[kW1AP].witness), "I not weakly 1AP",
                                a.oracle_holds(a.ideal(j), kW1AP) && oracle::check(ij, kW1AP).holds &&
                                    !a.oracle_holds(a.ideal(k), kW1AP)));
      } else {
        acc.skip(3);
      }
    }
  }
}

void verify_s(const RingAnalysis& a, Acc& acc) {
  const auto& r = a.R();
  std::vector<std::pair<ElemSet, std::vector<Elem>>> sets;
  auto add_set = [&](std::vector<Elem> gens) {
    ElemSet s = multiplicative_closure(r, gens);
    if (s.contains(r.zero())) return;
    for (auto& e : sets)
      if (e.first == s) return;
    sets.emplace_back(std::move(s), std::move(gens));
  };
  add_set(r.units().to_vector());
  for (auto s : r.nonunit_list()) add_set({s});
  const ElemSet zd = zero_divisors(r);
  for (const auto& [s, gens] : sets) {
    auto [l, f] = mk_localization(a.ring(), gens, a.limits());
    std::map<std::vector<Elem>, bool> cache;
    std::string s_text = format_set(r, s);
    for (auto k : a.proper()) {
      const Ideal& I = a.ideal(k);
      const Ideal si = hom_image_ideal(f, I);
      bool si_w = false;
      if (si.is_proper()) {
        auto key = si.elements();
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, check_property(si, kW1AP).holds).first;
        si_w = it->second;
      }
      // (1)
      if (a.w1ap(k) && !I.members().intersects(s)) {
        acc.inst(0);
        if (!si.is_proper() || !si_w)
          acc.violation(0, viol({a.ideal_text(k)}, {"S=" + s_text}, "S^-1 I not weakly 1AP",
                                a.oracle_holds(I, kW1AP) &&
                                    (!si.is_proper() || !oracle::check(si, kW1AP).holds)));
      } else {
        acc.skip(0);
      }
      // (2)
      const bool hyp2 = !s.intersects(zd) && !s.intersects(z_relative(I)) && si.is_proper() && si_w;
      if (hyp2) {
        acc.inst(1);
        if (!a.w1ap(k))
          acc.violation(1, viol({a.ideal_text(k)}, {"S=" + s_text}, "I not weakly 1AP",
                                oracle::check(si, kW1AP).holds && !a.oracle_holds(I, kW1AP)));
      } else {
        acc.skip(1);
      }
    }
  }
}

// ---------------------------------------------------------------------------

void verify_free(const RingAnalysis& a, Acc& acc) {
  const auto& r = a.R();
  const auto& scan0 = a.scan(a.zero_idx());
  ElemSet nu_products(r.order());
  for (auto x : r.nonunit_list())
    for (auto y : r.nonunit_list()) nu_products.insert(r.mul(x, y));
  // products a*b with a in I1, b in I2, for proper I1, I2
  const auto& pr = a.proper();
  std::vector<std::vector<ElemSet>> prods(pr.size(), std::vector<ElemSet>(pr.size(), ElemSet(r.order())));
  for (std::size_t x = 0; x < pr.size(); ++x)
    for (std::size_t y = x; y < pr.size(); ++y) {
      ElemSet s(r.order());
      a.ideal(pr[x]).members().for_each([&](Elem u) {
        a.ideal(pr[y]).members().for_each([&](Elem v) { s.insert(r.mul(u, v)); });
      });
      prods[x][y] = s;
      prods[y][x] = s;
    }

  for (auto k : pr) {
    if (!a.w1ap(k)) {
      acc.skip(0);
      acc.skip(1);
      continue;
    }
    const Ideal& I = a.ideal(k);
    const ElemSet& rad = a.ideal(a.rad(k)).members();
    const auto& scan = a.scan(k);
    // tri: nonunit a, b enter only through p = ab
    nu_products.for_each([&](Elem p) {
      if (I.contains(p)) return;
      for (auto j : pr) {
        const ElemSet& J = a.ideal(j).members();
        if (!J.is_subset_of(scan.mul_in(p))) continue;
        if (!(J & scan0.ann(p)).is_subset_of(rad)) {
          acc.skip(0);
          continue;
        }
        acc.inst(0);
        if (!J.is_subset_of(rad)) {
          // find the nonunit pair and an element of J outside sqrt(I)
          Elem pa = 0, pb = 0;
          for (auto x : r.nonunit_list())
            for (auto y : r.nonunit_list())
              if (r.mul(x, y) == p) {
                pa = x;
                pb = y;
                goto found;
              }
        found:
          const Elem c = static_cast<Elem>((J - rad).first());
          acc.violation(0, viol({a.ideal_text(k), a.ideal_text(j)}, a.names({pa, pb, c}),
                                "J not inside sqrt(I)",
                                a.oracle_holds(I, kW1AP) && !literal_in_radical(I, c)));
        }
      }
    });
    // Statement over arbitrary a, b: with a = 1 no triple zero can occur.
    for (std::size_t p = 0; p < r.order(); ++p) {
      if (I.contains(p)) continue;
      for (auto j : pr) {
        const ElemSet& J = a.ideal(j).members();
        if (J.is_subset_of(scan.mul_in(p)) && !J.is_subset_of(rad))
          acc.note("a unit a makes the hypothesis hold with J outside sqrt(I)",
                   a.spec() + " I=" + a.ideal_text(k) + " a=1 b=" + r.name(static_cast<Elem>(p)) +
                       " J=" + a.ideal_text(j));
      }
    }
    // free
    for (std::size_t x = 0; x < pr.size(); ++x)
      for (std::size_t y = 0; y < pr.size(); ++y) {
        const std::size_t p12 = a.product(pr[x], pr[y]);
        for (std::size_t z = 0; z < pr.size(); ++z) {
          const std::size_t p = a.product(p12, pr[z]);
          if (p == a.zero_idx() || !a.subset(p, k)) continue;
          const ElemSet& i3 = a.ideal(pr[z]).members();
          bool is_free = true;
          prods[x][y].for_each([&](Elem q) {
            if (is_free && !I.contains(q) && !((scan0.ann(q) & i3) - rad).empty()) is_free = false;
          });
          if (!is_free) {
            acc.skip(1);
            continue;
          }
          acc.inst(1);
          if (a.subset(p12, k) || a.subset(pr[z], a.rad(k))) continue;
          bool lit_free = true;
          a.ideal(pr[x]).members().for_each([&](Elem u) {
            a.ideal(pr[y]).members().for_each([&](Elem v) {
              i3.for_each([&](Elem w) {
                if (r.mul(r.mul(u, v), w) == r.zero() && !I.contains(r.mul(u, v)) &&
                    !literal_in_radical(I, w))
                  lit_free = false;
              });
            });
          });
          acc.violation(1, viol({a.ideal_text(k), a.ideal_text(pr[x]), a.ideal_text(pr[y]),
                                 a.ideal_text(pr[z])},
                                {}, "I1I2 not in I and I3 not in sqrt(I)",
                                lit_free && a.oracle_holds(I, kW1AP)));
        }
      }
  }
}

}  // namespace

void mine_nq(const RingAnalysis& a, NqSearch& out) {
  if (a.quasilocal) return;
  ++out.rings_searched;
  const auto annmax = ann_is_maximal(a);
  for (auto k : a.proper()) {
    ++out.ideals_searched;
    if (!a.w1ap(k) || a.holds(k, P::WeaklyPrimary)) continue;
    const Ideal& I = a.ideal(k);
    NqCandidate c;
    c.ring = a.spec();
    c.ideal = a.ideal_text(k);
    c.witness = a.names(a.rec(k)[P::WeaklyPrimary].witness);
    std::optional<Elem> m;
    I.members().for_each([&](Elem i) {
      if (!m && annmax[i]) m = i;
    });
    if (m) c.max_ann_element = a.R().name(*m);
    bool rep = a.oracle_holds(I, kW1AP) && !a.oracle_holds(I, P::WeaklyPrimary);
    if (m) {
      rep = rep && literal_maximal(a.R(), literal_ann(a.R(), *m));
    } else {
      I.members().for_each(
          [&](Elem i) { rep = rep && !literal_maximal(a.R(), literal_ann(a.R(), i)); });
    }
    c.replayed = rep;
    out.separation_found = true;
    if (!m) out.any_without_max_ann = true;
    out.candidates.push_back(std::move(c));
  }
}

const std::vector<VerifierDef>& verifiers() {
  static const std::vector<VerifierDef> defs = {
      {"tr", "implications among weakly prime, weakly primary, 1AP, weakly 1AP, weakly 2AP-primary",
       {"weakly_prime", "weakly_primary", "1AP", "weakly_2AP_primary", "domain", "quasilocal_nil"},
       verify_tr},
      {"max", "weakly 1AP with maximal radical is primary", {"main"}, verify_max},
      {"rad", "reduced ring, nonzero weakly 1AP: radical is prime", {"prime", "maximal"}, verify_rad},
      {"vni", "von Neumann regular: weakly 1AP iff primary iff 1AP", {"main"}, verify_vni},
      {"nq", "non-quasilocal, no maximal annihilator: weakly 1AP iff weakly primary", {"main"}, verify_nq},
      {"nounit", "nonunit w with wi != 0 and w+u nonunit: weakly 1AP implies weakly primary",
       {"main"}, verify_nounit},
      {"d", "reduced divided (and chained) rings: weakly 1AP iff weakly primary",
       {"divided", "chained"}, verify_d},
      {"ch", "u-rings: five equivalent conditions", {"main"}, verify_ch},
      {"abI", "1-triple-zero consequences (abI, I^3, reduced rings)",
       {"abI", "bcI_acI_squares", "cube", "reduced_zero", "reduced_ac_bc"}, verify_abi},
      {"irreducible", "irreducible witnesses when weakly 1AP but not weakly primary",
       {"existence", "every_witness"}, verify_irreducible},
      {"intersection", "intersections of weakly 1AP ideals with equal radicals",
       {"pairs", "triples"}, verify_intersection},
      {"residual", "(I:c) is weakly primary for nonunit c outside I", {"main"}, verify_residual},
      {"w1", "products of two non-fields: four equivalent conditions", {"main"}, verify_w1},
      {"fi", "finite products: every proper ideal weakly 1AP iff two field factors",
       {"fi", "VNfi"}, verify_fi},
      {"f", "transfer along homomorphisms", {"monomorphism", "epimorphism"}, verify_f},
      {"quotient", "quotient transfer", {"part1", "part2", "part3", "part4"}, verify_quotient},
      {"S", "localization transfer", {"part1", "part2"}, verify_s},
      {"free", "triple-zero-free products", {"tri", "free"}, verify_free},
  };
  return defs;
}

}  // namespace ringlab::detail
