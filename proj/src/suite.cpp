#include "ringlab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>

#include "ringlab/constructions.hpp"
#include "ringlab/dsl.hpp"
#include "suite_internal.hpp"

namespace ringlab {

namespace detail {

RingAnalysis::RingAnalysis(std::string spec, RingPtr r, const Limits& limits)
    : spec_(std::move(spec)), r_(std::move(r)), limits_(limits) {
  ideals_ = all_ideals(r_, limits_);
  const std::size_t n = ideals_.size();
  for (std::size_t k = 0; k < n; ++k) {
    index_.emplace(ideals_[k].members(), k);
    if (ideals_[k].is_proper()) proper_.push_back(k);
    if (ideals_[k].is_zero()) zero_ = k;
    if (ideals_[k].is_whole()) whole_ = k;
  }
  scans_.resize(n);
  recs_.resize(n);
  rad_.resize(n, whole_);
  for (auto k : proper_) {
    scans_[k] = std::make_unique<IdealScan>(ideals_[k]);
    PropertyRecord rec{ideals_[k], scans_[k]->rad(), {}};
    for (auto p : kAllProperties) rec[p] = scans_[k]->check(p);
    if (!lattice_violations(rec).empty())
      throw std::logic_error("property lattice broken on " + r_->label() + " " +
                             ideals_[k].to_string());
    recs_[k] = std::move(rec);
    rad_[k] = index(scans_[k]->rad());
  }
  prod_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      prod_[a][b] = prod_[b][a] = index(ideal_product(ideals_[a], ideals_[b]));
  maximal_.assign(n, false);
  prime_.assign(n, false);
  std::size_t maximal_count = 0;
  for (auto k : proper_) {
    bool top = true;
    for (auto j : proper_)
      if (j != k && subset(k, j)) top = false;
    maximal_[k] = top;
    maximal_count += top;
    prime_[k] = is_prime_ideal(ideals_[k]);
  }
  reduced = is_reduced(*r_);
  vnr = is_vnr(*r_);
  quasilocal = maximal_count == 1;
  field = is_field(*r_);
  domain = is_domain(*r_);
  divided = is_divided(r_, limits_);
  chained = is_chained(*r_);
  u_ring = is_u_ring(r_, limits_);
  nil_idx = rad_[zero_];
}

std::size_t RingAnalysis::index(const ElemSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw std::logic_error("set is not an ideal of " + r_->label());
  return it->second;
}

std::string RingAnalysis::ideal_text(std::size_t k) const { return ideal_text(ideals_[k]); }

std::string RingAnalysis::ideal_text(const Ideal& i) const { return to_string(ideal_expr_of(i)); }

std::vector<std::string> RingAnalysis::names(const std::vector<Elem>& es) const {
  std::vector<std::string> out;
  for (auto e : es) out.push_back(r_->name(e));
  return out;
}

bool RingAnalysis::oracle_holds(const Ideal& i, Property p) const {
  std::string key = i.ring().label() + "|" + format_set(i.ring(), i.members());
  auto k = std::make_pair(std::move(key), static_cast<int>(p));
  auto it = oracle_memo_.find(k);
  if (it != oracle_memo_.end()) return it->second;
  bool v = oracle::check(i, p).holds;
  oracle_memo_.emplace(std::move(k), v);
  return v;
}

Acc::Acc(const std::vector<std::string>& parts) {
  for (const auto& p : parts) parts_.push_back(PartCount{p, 0, 0, 0});
}

void Acc::violation(std::size_t part, Violation v) {
  ++parts_[part].violations;
  v.part = parts_[part].part;
  violations_.push_back(std::move(v));
}

void Acc::note(const std::string& key, const std::string& example) {
  for (auto& n : notes_)
    if (n.key == key) {
      ++n.count;
      return;
    }
  notes_.push_back(Note{key, 1, example});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// corpus

std::vector<std::string> default_corpus_specs() {
  std::vector<std::string> out;
  for (unsigned n = 2; n <= 60; ++n) out.push_back("Z" + std::to_string(n));
  for (unsigned a = 2; a <= 9; ++a)
    for (unsigned b = a; b <= 9; ++b)
      out.push_back("prod(Z" + std::to_string(a) + ",Z" + std::to_string(b) + ")");
  for (unsigned a = 2; a <= 3; ++a)
    for (unsigned b = a; b <= 3; ++b)
      for (unsigned c = b; c <= 3; ++c)
        out.push_back("prod(Z" + std::to_string(a) + ",Z" + std::to_string(b) + ",Z" +
                      std::to_string(c) + ")");
  for (unsigned n = 2; n <= 16; ++n)
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0) out.push_back("idealize(" + std::to_string(n) + "," + std::to_string(d) + ")");
  out.push_back("table(f2xy)");
  return out;
}

Corpus build_corpus(const std::vector<std::string>& specs, bool with_quotients,
                    const Limits& limits) {
  Corpus c;
  std::set<std::string> seen;
  auto add = [&](const std::string& spec) -> RingPtr {
    if (!seen.insert(spec).second) return nullptr;
    try {
      auto r = build_ring(parse_ring(spec), limits);
      c.items.push_back({spec, r});
      return r;
    } catch (const RingError& e) {
      if (e.kind() != ErrorKind::Resource) throw;
      c.excluded.push_back(spec);
      return nullptr;
    }
  };
  std::vector<std::pair<std::string, RingPtr>> bases;
  for (const auto& s : specs)
    if (auto r = add(s)) bases.emplace_back(s, r);
  if (!with_quotients) return c;
  for (const auto& [spec, r] : bases) {
    std::vector<Ideal> ideals;
    try {
      ideals = all_ideals(r, limits);
    } catch (const RingError& e) {
      if (e.kind() != ErrorKind::Resource) throw;
      continue;
    }
    for (const auto& j : ideals) {
      if (!j.is_proper() || j.is_zero()) continue;
      add("quot(" + spec + "," + to_string(ideal_expr_of(j)) + ")");
    }
  }
  return c;
}

Corpus default_corpus(const Limits& limits) {
  return build_corpus(default_corpus_specs(), true, limits);
}

Corpus load_corpus(const std::string& text, const Limits& limits) {
  std::vector<std::string> specs;
  bool quotients = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line == "default") {
      auto d = default_corpus_specs();
      specs.insert(specs.end(), d.begin(), d.end());
    } else if (line == "quotients") {
      quotients = true;
    } else {
      specs.push_back(line);
    }
  }
  return build_corpus(specs, quotients, limits);
}

// ---------------------------------------------------------------------------

std::string status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Vacuous: return "vacuous";
    case Status::Violated: return "violated";
    case Status::OutOfScope: return "out_of_scope";
  }
  return {};
}

std::optional<Status> parse_status(const std::string& s) {
  for (auto st : {Status::Verified, Status::Vacuous, Status::Violated, Status::OutOfScope})
    if (status_name(st) == s) return st;
  return std::nullopt;
}

std::size_t SuiteResult::total_violations() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.violation_count;
  return n;
}

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> cat = [] {
    std::vector<TheoremInfo> out;
    for (const auto& v : detail::verifiers()) out.push_back({v.id, v.title, true});
    out.push_back({"nq_question", "search for weakly 1AP, not weakly primary ideals of non-quasilocal rings", true});
    out.push_back({"ded", "Dedekind domains (infinite rings)", false});
    out.push_back({"rx", "polynomial rings R[X] (infinite rings)", false});
    out.push_back({"cf", "localization of K[x,y] (infinite ring)", false});
    out.push_back({"tt", "corrected statements about 1-absorbing primary ideals", false});
    return out;
  }();
  return cat;
}

namespace {

struct RingOutcome {
  std::vector<detail::Acc> accs;
  NqSearch nq;
  std::string error;
};

template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) f(i);
  };
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::thread> ts;
  for (unsigned t = 0; t < jobs; ++t) ts.emplace_back(worker);
  for (auto& t : ts) t.join();
}

}  // namespace

SuiteResult run_suite(const Corpus& corpus, const SuiteOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& defs = detail::verifiers();
  std::vector<std::size_t> selected;
  bool want_nq = opts.theorems.empty();
  for (const auto& id : opts.theorems) {
    if (id == "nq_question") {
      want_nq = true;
      continue;
    }
    auto it = std::find_if(defs.begin(), defs.end(), [&](const auto& d) { return d.id == id; });
    if (it == defs.end()) {
      auto cat = theorem_catalog();
      bool known = std::any_of(cat.begin(), cat.end(), [&](const auto& c) { return c.id == id; });
      if (!known) throw RingError(ErrorKind::Malformed, "unknown theorem id '" + id + "'");
      continue;  // out of scope: reported, not run
    }
    selected.push_back(static_cast<std::size_t>(it - defs.begin()));
  }
  if (opts.theorems.empty()) {
    selected.resize(defs.size());
    std::iota(selected.begin(), selected.end(), 0);
  }
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<RingOutcome> outcomes(corpus.items.size());
  std::vector<double> elapsed(defs.size(), 0);
  std::mutex elapsed_mu;
  parallel_for(corpus.items.size(), opts.jobs, [&](std::size_t i) {
    const auto& item = corpus.items[i];
    auto& out = outcomes[i];
    detail::RingAnalysis a(item.spec, item.ring, opts.limits);
    for (auto s : selected) {
      const auto ts = std::chrono::steady_clock::now();
      detail::Acc acc(defs[s].parts);
      defs[s].run(a, acc);
      for (auto& v : acc.violations()) v.ring = item.spec;
      out.accs.push_back(std::move(acc));
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - ts).count();
      std::lock_guard lock(elapsed_mu);
      elapsed[s] += ms;
    }
    if (want_nq) detail::mine_nq(a, out.nq);
  });

  SuiteResult res;
  res.rings = corpus.items.size();
  for (std::size_t t = 0; t < selected.size(); ++t) {
    const auto& def = defs[selected[t]];
    TheoremReport rep;
    rep.id = def.id;
    rep.title = def.title;
    for (const auto& p : def.parts) rep.parts.push_back(PartCount{p, 0, 0, 0});
    for (auto& o : outcomes) {
      auto& acc = o.accs[t];
      for (std::size_t p = 0; p < rep.parts.size(); ++p) {
        rep.parts[p].instances += acc.parts()[p].instances;
        rep.parts[p].skips += acc.parts()[p].skips;
        rep.parts[p].violations += acc.parts()[p].violations;
      }
      rep.violation_count += acc.violations().size();
      for (auto& v : acc.violations())
        if (rep.violations.size() < opts.max_violations) rep.violations.push_back(std::move(v));
      for (auto& n : acc.notes()) {
        auto it = std::find_if(rep.notes.begin(), rep.notes.end(),
                               [&](const Note& x) { return x.key == n.key; });
        if (it == rep.notes.end())
          rep.notes.push_back(n);
        else
          it->count += n.count;
      }
    }
    for (const auto& p : rep.parts) {
      rep.instances += p.instances;
      rep.skips += p.skips;
    }
    rep.status = rep.violation_count ? Status::Violated
                 : rep.instances     ? Status::Verified
                                     : Status::Vacuous;
    rep.elapsed_ms = elapsed[selected[t]];
    res.reports.push_back(std::move(rep));
  }
  for (const auto& id : opts.theorems)
    for (const auto& c : theorem_catalog())
      if (c.id == id && !c.in_scope) {
        TheoremReport rep;
        rep.id = c.id;
        rep.title = c.title;
        rep.status = Status::OutOfScope;
        res.reports.push_back(std::move(rep));
      }
  if (want_nq) {
    NqSearch nq;
    for (auto& o : outcomes) {
      nq.rings_searched += o.nq.rings_searched;
      nq.ideals_searched += o.nq.ideals_searched;
      nq.any_without_max_ann = nq.any_without_max_ann || o.nq.any_without_max_ann;
      nq.separation_found = nq.separation_found || o.nq.separation_found;
      for (auto& c : o.nq.candidates) nq.candidates.push_back(std::move(c));
    }
    res.nq = std::move(nq);
  }
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<SeparationHit> search_separation(const Corpus& corpus, const std::string& a,
                                             const std::string& b, unsigned jobs) {
  auto pa = parse_property(a), pb = parse_property(b);
  if (!pa) throw RingError(ErrorKind::Malformed, "unknown property '" + a + "'");
  if (!pb) throw RingError(ErrorKind::Malformed, "unknown property '" + b + "'");
  std::vector<std::vector<SeparationHit>> per(corpus.items.size());
  parallel_for(corpus.items.size(), jobs, [&](std::size_t i) {
    const auto& item = corpus.items[i];
    for (const auto& I : all_ideals(item.ring)) {
      if (!I.is_proper()) continue;
      IdealScan scan(I);
      if (!scan.check(*pa).holds) continue;
      auto vb = scan.check(*pb);
      if (vb.holds) continue;
      SeparationHit h{item.spec, to_string(ideal_expr_of(I)), {}};
      for (auto e : vb.witness) h.witness.push_back(item.ring->name(e));
      per[i].push_back(std::move(h));
    }
  });
  std::vector<SeparationHit> out;
  for (auto& v : per)
    for (auto& h : v) out.push_back(std::move(h));
  return out;
}

}  // namespace ringlab
