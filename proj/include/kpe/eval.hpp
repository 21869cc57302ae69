#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kpe/corpus.hpp"
#include "kpe/extractor.hpp"
#include "kpe/text.hpp"

namespace kpe {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;
};

/// Size of the multiset intersection of two key lists: each gold key matches
/// at most one prediction and vice versa.
std::size_t match_sets(const std::vector<std::string>& predicted, const std::vector<std::string>& gold);

/// P = matched / min(k, |predicted|) (or / k when strict), 0 without
/// predictions; R = matched / |gold|; F1 their harmonic mean or 0.
/// Throws std::invalid_argument when k is 0 or gold is empty.
PrfScore prf_at_k(const std::vector<std::string>& predicted, const std::vector<std::string>& gold,
                  std::size_t k, bool strict_at_k = false);

/// Match key of a phrase: its stem sequence, or its normalized surface
/// sequence when exact is set. Empty for a phrase without tokens.
std::string phrase_match_key(const Analyzer& analyzer, std::string_view phrase, bool exact);
std::string prediction_key(const ScoredPhrase& phrase, bool exact);

struct BenchDocument {
  std::string id;
  ProcessedDocument doc;
  std::vector<std::string> gold;  // match keys, empty phrases dropped
};

std::vector<BenchDocument> prepare_documents(const std::vector<NewsRecord>& records,
                                             const Analyzer& analyzer, bool exact_match,
                                             std::size_t jobs = 1);

struct BenchmarkConfig {
  std::vector<std::size_t> ks{5, 10};
  std::size_t min_gold = 2;
  bool strict_at_k = false;
  bool exact_match = false;
  std::size_t jobs = 1;

  void validate() const;
};

// Per-document metric values for one method. Merging concatenates, and the
// final average sums sorted values, so the result is independent of document
// order and of how the work was partitioned.
class MetricAccumulator {
 public:
  explicit MetricAccumulator(std::size_t k_count = 0) : values_(k_count * 3) {}

  void add(const std::vector<PrfScore>& per_k);
  void merge(const MetricAccumulator& other);
  std::size_t count() const { return count_; }
  /// Macro averages, one PrfScore per k (matched left at 0).
  std::vector<PrfScore> averages() const;

 private:
  std::vector<std::vector<double>> values_;  // [k * 3 + metric] -> per-document values
  std::size_t count_ = 0;
};

struct MethodRow {
  std::string method;
  std::string label;
  std::vector<PrfScore> at_k;  // parallel to EvalReport::ks
  std::size_t failures = 0;
};

struct EvalReport {
  std::vector<std::size_t> ks;
  std::size_t min_gold = 0;
  std::size_t document_count = 0;  // documents averaged over
  std::size_t excluded_count = 0;  // documents below min_gold or without gold
  bool strict_at_k = false;
  bool exact_match = false;
  std::vector<MethodRow> rows;
  std::vector<std::string> diagnostics;

  std::string subset() const;
  bool any_failures() const;
};

/// Runs every extractor on every document with at least min_gold gold keys.
/// A method that throws on a document scores zero there and the failure is
/// recorded in the diagnostics.
EvalReport run_benchmark(const std::vector<BenchDocument>& documents,
                         const std::vector<const KeyphraseExtractor*>& methods,
                         const BenchmarkConfig& config);

std::string render_report_text(const EvalReport& report);
std::string render_report_json(const std::vector<EvalReport>& reports);

}  // namespace kpe
