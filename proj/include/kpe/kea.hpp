#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kpe/candidates.hpp"
#include "kpe/corpus.hpp"
#include "kpe/ranking.hpp"
#include "kpe/stat_models.hpp"

namespace kpe {

struct KeaFeatures {
  double tfidf = 0.0;
  double first_occurrence = 0.0;  // fraction of the document before the first appearance
};

/// tfidf = freq(P, D) / size(D) * -log2(df(P) / N), size(D) in tokens;
/// first_occurrence = tokens preceding the first appearance / size(D).
KeaFeatures kea_featurize(const ProcessedDocument& doc, const Candidate& candidate,
                          const DocumentFrequencyTable& df);
double kea_tfidf(std::size_t frequency, std::size_t doc_size, std::size_t doc_count,
                 std::size_t total_documents);

// Equal-frequency cut points. A value v falls in bin = number of cut points <= v,
// so bins cover the whole real line.
class Discretizer {
 public:
  Discretizer() = default;
  explicit Discretizer(std::vector<double> cuts) : cuts_(std::move(cuts)) {}

  static Discretizer fit(std::vector<double> values, std::size_t bins);

  std::size_t bin(double value) const;
  std::size_t bin_count() const { return cuts_.size() + 1; }
  const std::vector<double>& cuts() const { return cuts_; }

 private:
  std::vector<double> cuts_;
};

struct KeaTrainingConfig {
  std::size_t bins = 8;
  std::size_t max_n = 3;
  bool exact_match = false;  // match gold on surfaces instead of stems
};

class KeaModel {
 public:
  static constexpr std::string_view kMagic = "KPE-KEA";
  static constexpr int kVersion = 1;

  Discretizer tfidf_bins;
  Discretizer distance_bins;
  std::size_t positives = 0;  // Y
  std::size_t negatives = 0;  // N
  // raw per-bin counts; Laplace +1 smoothing is applied when scoring
  std::vector<std::size_t> tfidf_yes, tfidf_no;
  std::vector<std::size_t> distance_yes, distance_no;
  std::size_t max_n = 3;

  double p_tfidf(std::size_t bin, bool yes) const;
  double p_distance(std::size_t bin, bool yes) const;

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static KeaModel load(std::istream& in);
  static KeaModel load(const std::filesystem::path& path);

  bool operator==(const KeaModel& other) const;
};

struct KeaExample {
  KeaFeatures features;
  bool positive = false;
};

/// Fits bins on the pooled feature values and counts examples per bin and
/// class. Throws std::invalid_argument without at least one positive and one
/// negative example.
KeaModel kea_fit(const std::vector<KeaExample>& examples, std::size_t bins);

/// Builds examples from gold-annotated records: n-gram candidates that match a
/// gold keyphrase are positive, all others negative.
std::vector<KeaExample> kea_examples(const std::vector<NewsRecord>& records,
                                     const Analyzer& analyzer, const DocumentFrequencyTable& df,
                                     const KeaTrainingConfig& config = {});

KeaModel kea_train(const std::vector<NewsRecord>& records, const Analyzer& analyzer,
                   const DocumentFrequencyTable& df, const KeaTrainingConfig& config = {});

/// P(yes) / (P(yes) + P(no)), each class term = prior x P(tfidf bin | class) x
/// P(distance bin | class).
double kea_score(const KeaModel& model, const KeaFeatures& features);

std::vector<ScoredPhrase> kea_extract(const KeaModel& model, const ProcessedDocument& doc,
                                      const DocumentFrequencyTable& df, std::size_t k,
                                      bool suppress_subphrases = true);

}  // namespace kpe
