#include "ringlab/report.hpp"

#include <cstdio>
#include <sstream>

#include "ringlab/dsl.hpp"

namespace ringlab {

using nlohmann::json;

namespace {

std::vector<std::string> names_of(const FiniteRing& r, const std::vector<Elem>& es) {
  std::vector<std::string> out;
  for (auto e : es) out.push_back(r.name(e));
  return out;
}

std::string ideal_text(const Ideal& i) { return to_string(ideal_expr_of(i)); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

std::string braces(const std::vector<std::string>& v) { return "{" + join(v, ", ") + "}"; }

}  // namespace

ClassifyReport make_classify_report(const std::string& ring_spec, const PropertyRecord& rec) {
  ClassifyReport out;
  const auto& r = rec.ideal.ring();
  out.ring = ring_spec;
  out.ideal = ideal_text(rec.ideal);
  out.elements = names_of(r, rec.ideal.elements());
  out.radical = names_of(r, rec.rad.elements());
  for (auto p : kAllProperties)
    out.verdicts.push_back({std::string(property_name(p)), rec[p].holds, names_of(r, rec[p].witness)});
  return out;
}

IdealsReport make_ideals_report(const std::string& ring_spec, const RingPtr& r,
                                const Limits& limits) {
  IdealsReport out;
  out.ring = ring_spec;
  out.order = r->order();
  for (const auto& i : all_ideals(r, limits)) {
    IdealEntry e;
    e.ideal = ideal_text(i);
    e.elements = names_of(*r, i.elements());
    e.proper = i.is_proper();
    if (e.proper) {
      e.prime = is_prime_ideal(i);
      e.maximal = is_maximal_ideal(i);
      e.radical = radical(i) == i;
    }
    out.ideals.push_back(std::move(e));
  }
  return out;
}

RingReport make_ring_report(const std::string& ring_spec, const RingPtr& r, const Limits& limits) {
  RingReport out;
  out.ring = ring_spec;
  out.order = r->order();
  out.flags = {{"field", is_field(*r)},         {"domain", is_domain(*r)},
               {"reduced", is_reduced(*r)},     {"vnr", is_vnr(*r)},
               {"quasilocal", is_quasilocal(r, limits)},
               {"chained", is_chained(*r)},     {"divided", is_divided(r, limits)},
               {"u_ring", is_u_ring(r, limits)}};
  std::vector<Ideal> proper;
  std::vector<PropertyRecord> recs;
  for (const auto& i : all_ideals(r, limits))
    if (i.is_proper()) {
      proper.push_back(i);
      recs.push_back(classify(i));
      out.ideals.push_back(make_classify_report(ring_spec, recs.back()));
    }
  const auto w1ap = [&](const Ideal& i) {
    for (std::size_t k = 0; k < proper.size(); ++k)
      if (proper[k] == i) return recs[k].holds(Property::WeaklyOneAbsorbingPrimary);
    return false;
  };
  for (std::size_t x = 0; x < proper.size(); ++x)
    for (std::size_t y = x + 1; y < proper.size(); ++y) {
      const auto& a = recs[x];
      const auto& b = recs[y];
      if (!a.holds(Property::WeaklyOneAbsorbingPrimary) ||
          !b.holds(Property::WeaklyOneAbsorbingPrimary) || a.rad == b.rad)
        continue;
      const Ideal m = ideal_intersection(proper[x], proper[y]);
      if (m == proper[x] || m == proper[y]) continue;
      const std::string pair =
          ideal_text(proper[x]) + " ∩ " + ideal_text(proper[y]) + " = " + ideal_text(m);
      if (m.is_zero())
        out.notes.push_back(pair +
                            " is weakly 1-absorbing primary, as the zero ideal always is; the "
                            "radicals differ, so this pair is not an example of an intersection "
                            "that fails the property");
      else if (!w1ap(m))
        out.notes.push_back(pair + " is not weakly 1-absorbing primary; the radicals differ");
    }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

void to_json(json& j, const ClassifyReport& r) {
  json v = json::array();
  for (const auto& row : r.verdicts)
    v.push_back({{"property", row.property}, {"holds", row.holds}, {"witness", row.witness}});
  j = {{"ring", r.ring}, {"ideal", r.ideal}, {"elements", r.elements}, {"radical", r.radical},
       {"verdicts", v}};
}

void from_json(const json& j, ClassifyReport& r) {
  j.at("ring").get_to(r.ring);
  j.at("ideal").get_to(r.ideal);
  j.at("elements").get_to(r.elements);
  j.at("radical").get_to(r.radical);
  r.verdicts.clear();
  for (const auto& v : j.at("verdicts"))
    r.verdicts.push_back({v.at("property").get<std::string>(), v.at("holds").get<bool>(),
                          v.at("witness").get<std::vector<std::string>>()});
}

void to_json(json& j, const IdealsReport& r) {
  json a = json::array();
  for (const auto& e : r.ideals)
    a.push_back({{"ideal", e.ideal}, {"elements", e.elements}, {"proper", e.proper},
                 {"prime", e.prime}, {"maximal", e.maximal}, {"radical", e.radical}});
  j = {{"ring", r.ring}, {"order", r.order}, {"ideals", a}};
}

void from_json(const json& j, IdealsReport& r) {
  j.at("ring").get_to(r.ring);
  j.at("order").get_to(r.order);
  r.ideals.clear();
  for (const auto& e : j.at("ideals"))
    r.ideals.push_back({e.at("ideal").get<std::string>(),
                        e.at("elements").get<std::vector<std::string>>(),
                        e.at("proper").get<bool>(), e.at("prime").get<bool>(),
                        e.at("maximal").get<bool>(), e.at("radical").get<bool>()});
}

void to_json(json& j, const RingReport& r) {
  json flags = json::object();
  json order = json::array();
  for (const auto& [k, v] : r.flags) {
    flags[k] = v;
    order.push_back(k);
  }
  j = {{"ring", r.ring}, {"order", r.order}, {"flags", flags}, {"flag_order", order},
       {"ideals", r.ideals}, {"notes", r.notes}};
}

void from_json(const json& j, RingReport& r) {
  j.at("ring").get_to(r.ring);
  j.at("order").get_to(r.order);
  r.flags.clear();
  for (const auto& k : j.at("flag_order"))
    r.flags.emplace_back(k.get<std::string>(), j.at("flags").at(k.get<std::string>()).get<bool>());
  j.at("ideals").get_to(r.ideals);
  j.at("notes").get_to(r.notes);
}

void to_json(json& j, const SeparationHit& h) {
  j = {{"ring", h.ring}, {"ideal", h.ideal}, {"witness", h.witness}};
}

void from_json(const json& j, SeparationHit& h) {
  j.at("ring").get_to(h.ring);
  j.at("ideal").get_to(h.ideal);
  j.at("witness").get_to(h.witness);
}

void to_json(json& j, const Violation& v) {
  j = {{"ring", v.ring},         {"part", v.part},     {"ideals", v.ideals},
       {"witness", v.witness},   {"detail", v.detail}, {"replayed", v.replayed}};
}

void from_json(const json& j, Violation& v) {
  j.at("ring").get_to(v.ring);
  j.at("part").get_to(v.part);
  j.at("ideals").get_to(v.ideals);
  j.at("witness").get_to(v.witness);
  j.at("detail").get_to(v.detail);
  j.at("replayed").get_to(v.replayed);
}

void to_json(json& j, const PartCount& p) {
  j = {{"part", p.part}, {"instances", p.instances}, {"skips", p.skips}, {"violations", p.violations}};
}

void from_json(const json& j, PartCount& p) {
  j.at("part").get_to(p.part);
  j.at("instances").get_to(p.instances);
  j.at("skips").get_to(p.skips);
  j.at("violations").get_to(p.violations);
}

void to_json(json& j, const Note& n) {
  j = {{"key", n.key}, {"count", n.count}, {"example", n.example}};
}

void from_json(const json& j, Note& n) {
  j.at("key").get_to(n.key);
  j.at("count").get_to(n.count);
  j.at("example").get_to(n.example);
}

void to_json(json& j, const NqCandidate& c) {
  j = {{"ring", c.ring}, {"ideal", c.ideal}, {"witness", c.witness}, {"replayed", c.replayed},
       {"max_ann_element", c.max_ann_element ? json(*c.max_ann_element) : json(nullptr)}};
}

void from_json(const json& j, NqCandidate& c) {
  j.at("ring").get_to(c.ring);
  j.at("ideal").get_to(c.ideal);
  j.at("witness").get_to(c.witness);
  j.at("replayed").get_to(c.replayed);
  const auto& m = j.at("max_ann_element");
  c.max_ann_element = m.is_null() ? std::nullopt : std::optional(m.get<std::string>());
}

json suite_to_json(const SuiteResult& r, bool timing) {
  json reports = json::array();
  for (const auto& t : r.reports) {
    json o = {{"id", t.id},
              {"title", t.title},
              {"status", status_name(t.status)},
              {"instances", t.instances},
              {"skips", t.skips},
              {"violation_count", t.violation_count},
              {"parts", t.parts},
              {"notes", t.notes},
              {"violations", t.violations}};
    if (timing) o["elapsed_ms"] = t.elapsed_ms;
    reports.push_back(std::move(o));
  }
  json j = {{"rings", r.rings}, {"total_violations", r.total_violations()}, {"reports", reports}};
  if (r.nq) {
    const auto& nq = *r.nq;
    j["nq_question"] = {{"rings_searched", nq.rings_searched},
                        {"ideals_searched", nq.ideals_searched},
                        {"separation_found", nq.separation_found},
                        {"any_without_max_ann", nq.any_without_max_ann},
                        {"candidates", nq.candidates}};
  }
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

SuiteResult suite_from_json(const json& j) {
  SuiteResult r;
  j.at("rings").get_to(r.rings);
  for (const auto& o : j.at("reports")) {
    TheoremReport t;
    o.at("id").get_to(t.id);
    o.at("title").get_to(t.title);
    auto st = parse_status(o.at("status").get<std::string>());
    if (!st) throw RingError(ErrorKind::Malformed, "unknown status in report");
    t.status = *st;
    o.at("instances").get_to(t.instances);
    o.at("skips").get_to(t.skips);
    o.at("violation_count").get_to(t.violation_count);
    o.at("parts").get_to(t.parts);
    o.at("notes").get_to(t.notes);
    o.at("violations").get_to(t.violations);
    if (o.contains("elapsed_ms")) o.at("elapsed_ms").get_to(t.elapsed_ms);
    r.reports.push_back(std::move(t));
  }
  if (j.contains("nq_question")) {
    const auto& q = j.at("nq_question");
    NqSearch nq;
    q.at("rings_searched").get_to(nq.rings_searched);
    q.at("ideals_searched").get_to(nq.ideals_searched);
    q.at("separation_found").get_to(nq.separation_found);
    q.at("any_without_max_ann").get_to(nq.any_without_max_ann);
    q.at("candidates").get_to(nq.candidates);
    r.nq = std::move(nq);
  }
  if (j.contains("elapsed_ms")) j.at("elapsed_ms").get_to(r.elapsed_ms);
  return r;
}

json envelope(const std::string& kind, json payload) {
  return {{"schema", kReportSchema}, {"kind", kind}, {"result", std::move(payload)}};
}

// ---------------------------------------------------------------------------
// text

std::string render_text(const ClassifyReport& r) {
  std::ostringstream out;
  out << "ring    " << r.ring << "\n";
  out << "ideal   " << r.ideal << " = " << braces(r.elements) << "\n";
  out << "radical " << braces(r.radical) << "\n";
  for (const auto& v : r.verdicts) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  %s %-30s", v.holds ? "✓" : "✗", v.property.c_str());
    out << buf;
    if (!v.holds) out << " witness (" << join(v.witness, ", ") << ")";
    out << "\n";
  }
  return out.str();
}

std::string render_text(const IdealsReport& r) {
  std::ostringstream out;
  out << r.ring << ": order " << r.order << ", " << r.ideals.size() << " ideals\n";
  for (const auto& e : r.ideals) {
    std::vector<std::string> tags;
    if (!e.proper) tags.push_back("whole");
    if (e.prime) tags.push_back("prime");
    if (e.maximal) tags.push_back("maximal");
    if (e.radical) tags.push_back("radical");
    out << "  " << e.ideal << "  size " << e.elements.size();
    if (!tags.empty()) out << "  [" << join(tags, ", ") << "]";
    out << "\n";
  }
  return out.str();
}

std::string render_text(const RingReport& r) {
  std::ostringstream out;
  out << r.ring << ": order " << r.order << "\n";
  for (const auto& [k, v] : r.flags) out << "  " << (v ? "✓ " : "✗ ") << k << "\n";
  for (const auto& i : r.ideals) out << "\n" << render_text(i);
  if (!r.notes.empty()) out << "\nnotes\n";
  for (const auto& n : r.notes) out << "  " << n << "\n";
  return out.str();
}

std::string render_text(const SuiteResult& r, bool timing) {
  std::ostringstream out;
  out << "corpus: " << r.rings << " rings\n";
  for (const auto& t : r.reports) {
    out << "\n[" << t.id << "] " << t.title << "\n";
    out << "  status " << status_name(t.status) << ", instances " << t.instances << ", skips "
        << t.skips << ", violations " << t.violation_count;
    if (timing) out << ", " << static_cast<long>(t.elapsed_ms) << " ms";
    out << "\n";
    if (t.parts.size() > 1)
      for (const auto& p : t.parts)
        out << "    " << p.part << ": " << p.instances << " instances, " << p.skips << " skips, "
            << p.violations << " violations\n";
    for (const auto& n : t.notes)
      out << "  note: " << n.key << " (" << n.count << "x, e.g. " << n.example << ")\n";
    for (const auto& v : t.violations) {
      out << "  violation " << v.ring << " [" << v.part << "] " << join(v.ideals, " ");
      if (!v.witness.empty()) out << " witness " << join(v.witness, " ");
      out << ": " << v.detail << (v.replayed ? " (replayed)" : " (NOT replayed)") << "\n";
    }
    if (t.violations.size() < t.violation_count)
      out << "  ... " << t.violation_count - t.violations.size() << " more\n";
  }
  if (r.nq) {
    const auto& q = *r.nq;
    out << "\n[nq_question] weakly 1AP but not weakly primary ideals of non-quasilocal rings\n";
    out << "  searched " << q.rings_searched << " rings, " << q.ideals_searched << " ideals; "
        << q.candidates.size() << " candidates\n";
    for (const auto& c : q.candidates)
      out << "  " << c.ring << " " << c.ideal << " witness " << join(c.witness, " ")
          << (c.max_ann_element ? " max ann at " + *c.max_ann_element : " no maximal annihilator")
          << (c.replayed ? " (replayed)" : " (NOT replayed)") << "\n";
    out << "  candidate without a maximal annihilator: " << (q.any_without_max_ann ? "yes" : "no")
        << "\n";
  }
  out << "\ntotal violations: " << r.total_violations() << "\n";
  if (timing) out << "elapsed: " << static_cast<long>(r.elapsed_ms) << " ms\n";
  return out.str();
}

}  // namespace ringlab
