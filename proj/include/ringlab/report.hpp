#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/suite.hpp"

namespace ringlab {

inline constexpr const char* kReportSchema = "ringlab-report/1";

struct VerdictRow {
  std::string property;
  bool holds = true;
  std::vector<std::string> witness;

  friend bool operator==(const VerdictRow&, const VerdictRow&) = default;
};

/// Printable form of a PropertyRecord.
struct ClassifyReport {
  std::string ring;
  std::string ideal;
  std::vector<std::string> elements;
  std::vector<std::string> radical;
  std::vector<VerdictRow> verdicts;  // kAllProperties order

  friend bool operator==(const ClassifyReport&, const ClassifyReport&) = default;
};
ClassifyReport make_classify_report(const std::string& ring_spec, const PropertyRecord& rec);

struct IdealEntry {
  std::string ideal;
  std::vector<std::string> elements;
  bool proper = true;
  bool prime = false;
  bool maximal = false;
  bool radical = false;  // I = sqrt(I)

  friend bool operator==(const IdealEntry&, const IdealEntry&) = default;
};

struct IdealsReport {
  std::string ring;
  std::size_t order = 0;
  std::vector<IdealEntry> ideals;

  friend bool operator==(const IdealsReport&, const IdealsReport&) = default;
};
IdealsReport make_ideals_report(const std::string& ring_spec, const RingPtr& r,
                                const Limits& limits = {});

/// Ring flags, the classification of every proper ideal, and remarks about
/// pairs of ideals whose intersection behaves unexpectedly.
struct RingReport {
  std::string ring;
  std::size_t order = 0;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<ClassifyReport> ideals;
  std::vector<std::string> notes;

  friend bool operator==(const RingReport&, const RingReport&) = default;
};
RingReport make_ring_report(const std::string& ring_spec, const RingPtr& r,
                            const Limits& limits = {});

void to_json(nlohmann::json& j, const ClassifyReport& r);
void from_json(const nlohmann::json& j, ClassifyReport& r);
void to_json(nlohmann::json& j, const IdealsReport& r);
void from_json(const nlohmann::json& j, IdealsReport& r);
void to_json(nlohmann::json& j, const RingReport& r);
void from_json(const nlohmann::json& j, RingReport& r);
void to_json(nlohmann::json& j, const SeparationHit& h);
void from_json(const nlohmann::json& j, SeparationHit& h);

/// Suite output. Elapsed times are included only when `timing` is set so
/// that identical runs give identical bytes.
nlohmann::json suite_to_json(const SuiteResult& r, bool timing = false);
SuiteResult suite_from_json(const nlohmann::json& j);

/// Wraps a payload with the schema tag and a "kind" field.
nlohmann::json envelope(const std::string& kind, nlohmann::json payload);

std::string render_text(const ClassifyReport& r);
std::string render_text(const IdealsReport& r);
std::string render_text(const RingReport& r);
std::string render_text(const SuiteResult& r, bool timing = false);

}  // namespace ringlab
