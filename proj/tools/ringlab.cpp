// ringlab: classify ideals of small finite rings and check theorems over a corpus.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/report.hpp"

using namespace ringlab;

namespace {

enum Exit { kOk = 0, kViolations = 1, kParse = 2, kSemantic = 3, kResource = 4 };

struct Common {
  bool json = false;
  std::size_t max_order = Limits{}.max_order;
  Limits limits() const {
    Limits l;
    l.max_order = max_order;
    return l;
  }
};

void emit(const Common& c, const std::string& kind, const nlohmann::json& payload,
          const std::string& text) {
  if (c.json)
    std::cout << envelope(kind, payload).dump(2) << "\n";
  else
    std::cout << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingError(ErrorKind::Malformed, "cannot read corpus file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Corpus corpus_from(const std::string& path, const Limits& limits) {
  if (path.empty()) return default_corpus(limits);
  return load_corpus(read_file(path), limits);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative ring workbench for weakly 1-absorbing primary ideals"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Emit JSON instead of text");
  app.add_option("--max-order", common.max_order, "Largest ring order accepted")
      ->capture_default_str();

  std::string ring_text, ideal_text;
  auto* classify_cmd = app.add_subcommand("classify", "Decide every ideal property for one ideal");
  classify_cmd->add_option("ring", ring_text, "Ring expression, e.g. Z6 or prod(Z2,Z2,Z2)")->required();
  classify_cmd->add_option("ideal", ideal_text, "Ideal generators, e.g. (0) or ((1,0,0))")->required();

  auto* ideals_cmd = app.add_subcommand("ideals", "List the ideals of a ring");
  ideals_cmd->add_option("ring", ring_text, "Ring expression")->required();

  auto* report_cmd = app.add_subcommand("report", "Ring flags, every proper ideal, and remarks");
  report_cmd->add_option("ring", ring_text, "Ring expression")->required();

  std::string corpus_path, theorems;
  unsigned jobs = 1;
  std::size_t max_violations = SuiteOptions{}.max_violations;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check every theorem over a ring corpus");
  verify_cmd->add_option("--corpus", corpus_path, "Corpus file (default: built-in corpus)");
  verify_cmd->add_option("--theorems", theorems, "Comma-separated theorem ids (default: all)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  verify_cmd->add_option("--max-violations", max_violations, "Violations stored per theorem")
      ->capture_default_str();
  verify_cmd->add_flag("--timing", timing, "Include elapsed times");
  verify_cmd->add_flag("--list", [&](std::int64_t) {
    for (const auto& t : theorem_catalog())
      std::cout << t.id << (t.in_scope ? "  " : "  (out of scope) ") << t.title << "\n";
    std::exit(kOk);
  }, "List theorem ids and exit");

  std::string prop_a = "weakly_1AP", prop_b = "1AP";
  auto* search_cmd = app.add_subcommand("search", "Search the corpus");
  search_cmd->require_subcommand(1);
  search_cmd->add_option("--corpus", corpus_path, "Corpus file (default: built-in corpus)");
  search_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  auto* sep_cmd = search_cmd->add_subcommand("separation", "Ideals with property a but not b");
  sep_cmd->add_option("--a", prop_a, "Property that must hold")->capture_default_str();
  sep_cmd->add_option("--b", prop_b, "Property that must fail")->capture_default_str();
  auto* nq_cmd = search_cmd->add_subcommand(
      "nq-question", "Weakly 1AP, not weakly primary ideals of non-quasilocal rings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    const Limits limits = common.limits();
    if (*classify_cmd) {
      auto r = build_ring(parse_ring(ring_text), limits);
      auto i = resolve_ideal(r, parse_ideal(ideal_text));
      auto rep = make_classify_report(ring_text, classify(i));
      emit(common, "classify", rep, render_text(rep));
    } else if (*ideals_cmd) {
      auto r = build_ring(parse_ring(ring_text), limits);
      auto rep = make_ideals_report(ring_text, r, limits);
      emit(common, "ideals", rep, render_text(rep));
    } else if (*report_cmd) {
      auto r = build_ring(parse_ring(ring_text), limits);
      auto rep = make_ring_report(ring_text, r, limits);
      emit(common, "report", rep, render_text(rep));
    } else if (*verify_cmd) {
      SuiteOptions opts;
      opts.theorems = split_list(theorems);
      opts.jobs = jobs;
      opts.max_violations = max_violations;
      opts.limits = limits;
      auto corpus = corpus_from(corpus_path, limits);
      for (const auto& s : corpus.excluded)
        std::cerr << "note: " << s << " exceeds --max-order, left out\n";
      auto res = run_suite(corpus, opts);
      emit(common, "verify", suite_to_json(res, timing), render_text(res, timing));
      return res.total_violations() ? kViolations : kOk;
    } else if (*search_cmd) {
      auto corpus = corpus_from(corpus_path, limits);
      if (*sep_cmd) {
        auto hits = search_separation(corpus, prop_a, prop_b, jobs);
        std::ostringstream text;
        text << hits.size() << " ideals are " << prop_a << " but not " << prop_b << "\n";
        for (const auto& h : hits) {
          text << "  " << h.ring << " " << h.ideal << " witness (";
          for (std::size_t k = 0; k < h.witness.size(); ++k) text << (k ? ", " : "") << h.witness[k];
          text << ")\n";
        }
        emit(common, "separation",
             {{"a", prop_a}, {"b", prop_b}, {"hits", nlohmann::json(hits)}}, text.str());
      } else if (*nq_cmd) {
        SuiteOptions opts;
        opts.theorems = {"nq_question"};
        opts.jobs = jobs;
        opts.limits = limits;
        auto res = run_suite(corpus, opts);
        emit(common, "nq-question", suite_to_json(res), render_text(res));
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Resource) {
      std::cerr << "note: raise --max-order or shrink the input\n";
      return kResource;
    }
    return e.kind() == ErrorKind::Parse ? kParse : kSemantic;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kOk;
}
