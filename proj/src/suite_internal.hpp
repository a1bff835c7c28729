#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/oracle.hpp"
#include "ringlab/suite.hpp"

namespace ringlab::detail {

/// Everything the verifiers need about one ring, computed once.
class RingAnalysis {
 public:
  RingAnalysis(std::string spec, RingPtr r, const Limits& limits);

  const std::string& spec() const { return spec_; }
  const RingPtr& ring() const { return r_; }
  const FiniteRing& R() const { return *r_; }
  const Limits& limits() const { return limits_; }

  std::size_t count() const { return ideals_.size(); }
  const Ideal& ideal(std::size_t k) const { return ideals_[k]; }
  /// Index of an ideal given by its member set.
  std::size_t index(const ElemSet& s) const;
  std::size_t index(const Ideal& i) const { return index(i.members()); }
  const std::vector<std::size_t>& proper() const { return proper_; }
  std::size_t zero_idx() const { return zero_; }
  std::size_t whole_idx() const { return whole_; }

  const IdealScan& scan(std::size_t k) const { return *scans_[k]; }
  const PropertyRecord& rec(std::size_t k) const { return *recs_[k]; }
  bool holds(std::size_t k, Property p) const { return recs_[k]->holds(p); }
  bool w1ap(std::size_t k) const { return holds(k, Property::WeaklyOneAbsorbingPrimary); }
  std::size_t rad(std::size_t k) const { return rad_[k]; }
  bool subset(std::size_t a, std::size_t b) const {
    return ideals_[a].members().is_subset_of(ideals_[b].members());
  }
  std::size_t product(std::size_t a, std::size_t b) const { return prod_[a][b]; }
  bool is_maximal(std::size_t k) const { return maximal_[k]; }
  bool is_prime(std::size_t k) const { return prime_[k]; }

  bool reduced, vnr, quasilocal, field, domain, divided, chained, u_ring;
  std::size_t nil_idx;

  std::string ideal_text(std::size_t k) const;
  std::string ideal_text(const Ideal& i) const;
  std::vector<std::string> names(const std::vector<Elem>& es) const;

  /// Memoized definition-literal verdicts for replaying violations.
  bool oracle_holds(const Ideal& i, Property p) const;

 private:
  std::string spec_;
  RingPtr r_;
  Limits limits_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> index_;
  std::vector<std::size_t> proper_;
  std::size_t zero_ = 0, whole_ = 0;
  std::vector<std::unique_ptr<IdealScan>> scans_;
  std::vector<std::optional<PropertyRecord>> recs_;
  std::vector<std::size_t> rad_;
  std::vector<std::vector<std::size_t>> prod_;
  std::vector<bool> maximal_, prime_;
  mutable std::map<std::pair<std::string, int>, bool> oracle_memo_;
};

/// Per-theorem accumulator for one ring.
class Acc {
 public:
  Acc() = default;
  explicit Acc(const std::vector<std::string>& parts);

  void inst(std::size_t part, std::size_t k = 1) { parts_[part].instances += k; }
  void skip(std::size_t part, std::size_t k = 1) { parts_[part].skips += k; }
  void violation(std::size_t part, Violation v);
  void note(const std::string& key, const std::string& example);

  std::vector<PartCount>& parts() { return parts_; }
  std::vector<Violation>& violations() { return violations_; }
  std::vector<Note>& notes() { return notes_; }

 private:
  std::vector<PartCount> parts_;
  std::vector<Violation> violations_;
  std::vector<Note> notes_;
};

struct VerifierDef {
  std::string id;
  std::string title;
  std::vector<std::string> parts;
  std::function<void(const RingAnalysis&, Acc&)> run;
};

const std::vector<VerifierDef>& verifiers();

void mine_nq(const RingAnalysis& a, NqSearch& out);

}  // namespace ringlab::detail
