// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/oracle.hpp"
#include "ringlab/report.hpp"
#include "ringlab/suite.hpp"

using namespace ringlab;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<std::string> names(const FiniteRing& r, const std::vector<Elem>& es) {
  std::vector<std::string> out;
  for (auto e : es) out.push_back(r.name(e));
  return out;
}

Elem el(const RingPtr& r, const std::string& text) { return resolve_elem(r, parse_elem(text)); }

Ideal ideal_of(const RingPtr& r, const std::string& text) {
  return resolve_ideal(r, parse_ideal(text));
}

// Shared by criteria 4, 8 and 9.
struct SuiteRuns {
  Corpus corpus;
  SuiteResult serial, parallel, repeat;
  double serial_ms = 0;
};

Outcome criterion1() {
  Outcome o;
  auto r = mk_zn(6);
  auto i = zero_ideal(r);
  auto t0 = Clock::now();
  auto rec = classify(i);
  double ms = ms_since(t0);
  o.require(rec.holds(Property::WeaklyOneAbsorbingPrimary), "weakly_1AP is false");
  o.require(!rec.holds(Property::OneAbsorbingPrimary), "1AP is true");
  o.require(rec[Property::OneAbsorbingPrimary].witness == std::vector<Elem>{2, 2, 3},
            "1AP witness is not (2,2,3)");
  o.require(ms < 1.0, "took " + std::to_string(ms) + " ms");
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto r = mk_idealization(12, 6);
  auto i = ideal_of(r, "(0,6)");
  auto t0 = Clock::now();
  auto rec = classify(i);
  auto tz = find_triple_zeros(i);
  double ms = ms_since(t0);
  const auto& w = rec[Property::WeaklyOneAbsorbingPrimary];
  o.require(w.holds, "weakly_1AP is false, witness (" +
                         [&] {
                           auto n = names(*r, w.witness);
                           std::string s;
                           for (std::size_t k = 0; k < n.size(); ++k) s += (k ? "," : "") + n[k];
                           return s;
                         }() +
                         ")");
  o.require(!rec.holds(Property::OneAbsorbingPrimary), "1AP is true");
  TripleZero expected{el(r, "(2,0)"), el(r, "(2,0)"), el(r, "(3,0)")};
  o.require(std::find(tz.begin(), tz.end(), expected) != tz.end(),
            "((2,0),(2,0),(3,0)) missing from the violation set");
  o.require(names(*r, rec.rad.elements()) ==
                std::vector<std::string>{"(0,0)", "(0,6)", "(6,0)", "(6,6)"},
            "radical differs");
  o.require(ms < 10.0, "took " + std::to_string(ms) + " ms");
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto r = mk_product({mk_zn(2), mk_zn(2), mk_zn(2)});
  auto rec = classify(ideal_of(r, "((1,0,0))"));
  const auto& w = rec[Property::WeaklyOneAbsorbingPrimary];
  o.require(!w.holds, "weakly_1AP is true");
  auto n = names(*r, w.witness);
  const bool pattern = n.size() == 3 && n[0] == "(1,0,1)" && n[1] == "(1,0,1)" &&
                       n[2].size() == 7 && n[2].substr(2) == ",1,0)";
  o.require(pattern, "witness does not match ((1,0,1),(1,0,1),(a,1,0))");
  return o;
}

Outcome criterion4(const SuiteRuns& s) {
  Outcome o;
  std::size_t verifiers = 0;
  for (const auto& t : s.serial.reports) {
    ++verifiers;
    if (t.violation_count)
      o.require(false, t.id + ": " + std::to_string(t.violation_count) + " violations");
  }
  o.require(verifiers >= 17, "only " + std::to_string(verifiers) + " verifiers ran");
  o.require(s.serial_ms < 10 * 60 * 1000.0, "took " + std::to_string(s.serial_ms) + " ms");
  o.require(s.serial == s.parallel, "counts differ across --jobs");
  o.require(s.serial == s.repeat, "counts differ across runs");
  return o;
}

Outcome criterion5(const SuiteRuns& s) {
  Outcome o;
  const std::pair<Property, Property> lattice[] = {
      {Property::WeaklyPrime, Property::WeaklyOneAbsorbingPrimary},
      {Property::WeaklyPrimary, Property::WeaklyOneAbsorbingPrimary},
      {Property::OneAbsorbingPrimary, Property::WeaklyOneAbsorbingPrimary},
      {Property::WeaklyOneAbsorbingPrimary, Property::WeaklyTwoAbsorbingPrimary},
  };
  std::size_t bad = 0, checked = 0;
  for (const auto& item : s.corpus.items)
    for (const auto& i : all_ideals(item.ring)) {
      if (!i.is_proper()) continue;
      auto rec = classify(i);
      ++checked;
      for (auto [from, to] : lattice)
        if (rec.holds(from) && !rec.holds(to)) ++bad;
    }
  o.require(bad == 0, std::to_string(bad) + " implication failures");
  for (const auto& t : s.serial.reports)
    if (t.id == "tr") o.require(t.violation_count == 0, "tr verifier reports violations");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " ideals";
  return o;
}

Outcome criterion6(const SuiteRuns& s) {
  Outcome o;
  std::size_t disagreements = 0, ideals = 0;
  for (const auto& item : s.corpus.items) {
    if (item.ring->order() > 36) continue;
    for (const auto& i : all_ideals(item.ring)) {
      if (!i.is_proper()) continue;
      ++ideals;
      auto rec = classify(i);
      for (auto p : kAllProperties) {
        auto slow = oracle::check(i, p);
        if (slow.holds != rec[p].holds || slow.witness != rec[p].witness) ++disagreements;
      }
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(ideals) + " ideals";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto f = mk_f2xy_square();
  auto v = u_ring_violation(f);
  o.require(v.has_value(), "f2xy reported as a u-ring");
  if (v) {
    o.require(v->covered == ideal_of(f, "(x,y)"), "covered ideal is not (x,y)");
    std::vector<Ideal> want = {ideal_of(f, "(x)"), ideal_of(f, "(y)"), ideal_of(f, "(x+y)")};
    bool same = v->cover.size() == want.size();
    for (const auto& w : want)
      same = same && std::find(v->cover.begin(), v->cover.end(), w) != v->cover.end();
    o.require(same, "cover is not (x), (y), (x+y)");
  }
  for (unsigned n = 2; n <= 60; ++n) {
    auto z = mk_zn(n);
    if (!is_u_ring(z)) o.require(false, "Z" + std::to_string(n) + " not a u-ring");
    if (n <= 16 && !oracle::is_u_ring_exhaustive(z))
      o.require(false, "Z" + std::to_string(n) + " fails the exhaustive check");
  }
  return o;
}

Outcome criterion8(const SuiteRuns& s) {
  Outcome o;
  auto z12 = mk_zn(12);
  auto [loc, f] = mk_localization(z12, {1, 4});
  o.require(loc->order() == 3, "order " + std::to_string(loc->order()));
  o.require(loc->is_unit(f(4)), "4 does not map to a unit");
  bool found = false;
  for (const auto& t : s.serial.reports)
    if (t.id == "S") {
      found = true;
      o.require(t.violation_count == 0, std::to_string(t.violation_count) + " violations");
    }
  o.require(found, "S verifier did not run");
  return o;
}

Outcome criterion9(const SuiteRuns& s) {
  Outcome o;
  o.require(s.serial.nq.has_value(), "miner did not run");
  if (!s.serial.nq) return o;
  const auto& nq = *s.serial.nq;
  for (const auto& c : nq.candidates)
    if (!c.replayed) o.require(false, c.ring + " " + c.ideal + " does not replay");
  const auto text = render_text(s.serial);
  o.require(text.find("candidate without a maximal annihilator: ") != std::string::npos,
            "report does not state the annihilator answer");
  auto j = suite_to_json(s.serial);
  o.require(j.at("nq_question").contains("any_without_max_ann"), "JSON lacks the answer");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(nq.rings_searched) + " rings, " +
              std::to_string(nq.candidates.size()) + " candidates, without max ann: " +
              (nq.any_without_max_ann ? "yes" : "no");
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto rep = make_ring_report("Z6", mk_zn(6));
  bool noted = false;
  for (const auto& n : rep.notes) {
    const bool pair = (n.find("(2) ∩ (3) = (0)") == 0 || n.find("(3) ∩ (2) = (0)") == 0);
    if (pair && n.find("is weakly 1-absorbing primary") != std::string::npos) noted = true;
  }
  o.require(noted, "no note about (2) ∩ (3) = (0)");
  return o;
}

}  // namespace

int main() {
  SuiteRuns runs;
  runs.corpus = default_corpus();
  {
    SuiteOptions one;
    auto t0 = Clock::now();
    runs.serial = run_suite(runs.corpus, one);
    runs.serial_ms = ms_since(t0);
    SuiteOptions many;
    many.jobs = std::max(2u, std::thread::hardware_concurrency());
    runs.parallel = run_suite(runs.corpus, many);
    runs.repeat = run_suite(runs.corpus, one);
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Z6 (0): weakly 1AP, not 1AP, witness (2,2,3)", criterion1},
      {"idealize(12,6), 0(+)J: weakly 1AP, not 1AP, radical", criterion2},
      {"Z2^3, Z2x0x0: not weakly 1AP, witness pattern", criterion3},
      {"full suite on the default corpus: zero violations, deterministic",
       [&] { return criterion4(runs); }},
      {"implication lattice on every corpus ideal", [&] { return criterion5(runs); }},
      {"optimized predicates match the oracle on rings of order <= 36",
       [&] { return criterion6(runs); }},
      {"u-ring checks", criterion7},
      {"localization Z12 at {1,4}; S verifier", [&] { return criterion8(runs); }},
      {"nq_question miner", [&] { return criterion9(runs); }},
      {"Z6 report notes (2) ∩ (3) = (0)", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s criterion %zu: %s%s%s\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), o.detail.empty() ? "" : " | ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
