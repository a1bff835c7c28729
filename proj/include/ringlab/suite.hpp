#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

struct CorpusItem {
  std::string spec;  // ring DSL text
  RingPtr ring;
};

struct Corpus {
  std::vector<CorpusItem> items;
  /// Specs left out because they exceed the order bound.
  std::vector<std::string> excluded;
};

/// Z2..Z60, products of two rings from Z2..Z9 (unordered), products of three
/// from {Z2,Z3}, idealizations Z_n(+)(d) for n <= 16, and table(f2xy).
std::vector<std::string> default_corpus_specs();

/// Builds every ring expression, then (if requested) appends R/J for each base ring R
/// and each nonzero proper ideal J. Deterministic given the inputs.
Corpus build_corpus(const std::vector<std::string>& specs, bool with_quotients,
                    const Limits& limits = {});
Corpus default_corpus(const Limits& limits = {});

/// Corpus file: one ring expression per line, '#' starts a comment, the
/// line "default" expands to the default corpus specs, the line
/// "quotients" turns on quotient generation.
Corpus load_corpus(const std::string& text, const Limits& limits = {});

struct Violation {
  std::string ring;
  std::string part;
  std::vector<std::string> ideals;
  std::vector<std::string> witness;
  std::string detail;
  /// Re-derived with the definition-literal predicates.
  bool replayed = false;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct PartCount {
  std::string part;
  std::size_t instances = 0;
  std::size_t skips = 0;
  std::size_t violations = 0;

  friend bool operator==(const PartCount&, const PartCount&) = default;
};

/// Aggregated observation that is not a violation of the checked statement.
struct Note {
  std::string key;
  std::size_t count = 0;
  std::string example;

  friend bool operator==(const Note&, const Note&) = default;
};

enum class Status { Verified, Vacuous, Violated, OutOfScope };
std::string status_name(Status s);
std::optional<Status> parse_status(const std::string& s);

struct TheoremReport {
  std::string id;
  std::string title;
  Status status = Status::Vacuous;
  std::size_t instances = 0;
  std::size_t skips = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first max_violations, corpus order
  std::vector<PartCount> parts;
  std::vector<Note> notes;
  double elapsed_ms = 0;

  friend bool operator==(const TheoremReport& a, const TheoremReport& b) {
    return a.id == b.id && a.title == b.title && a.status == b.status &&
           a.instances == b.instances && a.skips == b.skips &&
           a.violation_count == b.violation_count && a.violations == b.violations &&
           a.parts == b.parts && a.notes == b.notes;
  }
};

/// One (R, I) with R non-quasilocal and I weakly 1-absorbing primary but not
/// weakly primary.
struct NqCandidate {
  std::string ring;
  std::string ideal;
  std::vector<std::string> witness;  // (a,b) breaking weak primality
  /// Some i in I whose annihilator is a maximal ideal, if any.
  std::optional<std::string> max_ann_element;
  bool replayed = false;

  friend bool operator==(const NqCandidate&, const NqCandidate&) = default;
};

struct NqSearch {
  std::size_t rings_searched = 0;
  std::size_t ideals_searched = 0;
  std::vector<NqCandidate> candidates;
  /// Some candidate has every ann(i) non-maximal (would contradict the
  /// annihilator version of the statement).
  bool any_without_max_ann = false;
  /// Some candidate exists at all: weak 1-absorbing primality and weak
  /// primality differ on a non-quasilocal ring.
  bool separation_found = false;

  friend bool operator==(const NqSearch&, const NqSearch&) = default;
};

struct SuiteOptions {
  /// Verifier ids to run; empty means all. "nq_question" selects the miner.
  std::vector<std::string> theorems;
  unsigned jobs = 1;
  std::size_t max_violations = 50;
  Limits limits;
};

struct SuiteResult {
  std::size_t rings = 0;
  std::vector<TheoremReport> reports;
  std::optional<NqSearch> nq;
  double elapsed_ms = 0;

  std::size_t total_violations() const;
  friend bool operator==(const SuiteResult& a, const SuiteResult& b) {
    return a.rings == b.rings && a.reports == b.reports && a.nq == b.nq;
  }
};

struct TheoremInfo {
  std::string id;
  std::string title;
  bool in_scope = true;
};
/// Verifiers in run order, followed by the out-of-scope entries.
const std::vector<TheoremInfo>& theorem_catalog();

/// Throws RingError(Malformed) for an unknown id in the filter.
SuiteResult run_suite(const Corpus& corpus, const SuiteOptions& opts = {});

/// (R, I) pairs where property a holds and b fails, with b's witness.
struct SeparationHit {
  std::string ring;
  std::string ideal;
  std::vector<std::string> witness;
};
std::vector<SeparationHit> search_separation(const Corpus& corpus, const std::string& a,
                                             const std::string& b, unsigned jobs = 1);

}  // namespace ringlab
