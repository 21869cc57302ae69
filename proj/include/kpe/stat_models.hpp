#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpe/candidates.hpp"
#include "kpe/ranking.hpp"
#include "kpe/text.hpp"

namespace kpe {

// ---------------------------------------------------------------------------
// Document frequencies

// Corpus size N and, per stem-sequence key, the number of documents that
// contain the term at least once. Lookups of unseen terms return 1.
class DocumentFrequencyTable {
 public:
  static constexpr std::string_view kMagic = "KPE-DF";
  static constexpr int kVersion = 1;

  DocumentFrequencyTable() = default;

  std::size_t total_documents() const { return total_documents_; }
  std::size_t count(const std::string& key) const;
  bool contains(const std::string& key) const { return df_.count(key) > 0; }
  std::size_t size() const { return df_.size(); }
  std::size_t max_n() const { return max_n_; }
  const std::unordered_map<std::string, std::size_t>& entries() const { return df_; }

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static DocumentFrequencyTable load(std::istream& in);
  static DocumentFrequencyTable load(const std::filesystem::path& path);

  class Builder {
   public:
    explicit Builder(std::size_t max_n = 3) : max_n_(max_n) {}
    void add_document(const ProcessedDocument& doc);
    void add_terms(std::span<const std::string> distinct_keys);
    DocumentFrequencyTable build() &&;

   private:
    std::size_t max_n_;
    std::size_t documents_ = 0;
    std::unordered_map<std::string, std::size_t> df_;
  };

 private:
  std::size_t total_documents_ = 0;
  std::size_t max_n_ = 3;
  std::unordered_map<std::string, std::size_t> df_;
};

/// Counts, per document, every n-gram candidate key up to max_n tokens.
/// Throws std::invalid_argument on an empty corpus.
DocumentFrequencyTable build_df(std::span<const ProcessedDocument> documents, std::size_t max_n = 3);

/// ln(1 + N / n_t)
double tfidf_idf(std::size_t total_documents, std::size_t doc_count);

// ---------------------------------------------------------------------------
// TFIDF

/// score = tf x ln(1 + N / n_t) over ngram_candidates(doc, max_n).
std::vector<ScoredPhrase> tfidf_extract(const ProcessedDocument& doc,
                                        const DocumentFrequencyTable& df, std::size_t k,
                                        std::size_t max_n = 3);

// ---------------------------------------------------------------------------
// KP-Miner

struct KpMinerConfig {
  std::size_t lasf = 3;
  std::size_t cutoff = 250;
  double alpha = 2.3;
  double sigma = 3.0;
  double position_factor = 1.0;
  std::size_t max_phrase_tokens = 0;  // 0 = unlimited

  void validate() const;
};

/// log2(N / n)
double kpminer_idf(std::size_t total_documents, std::size_t doc_count);

/// min(|N_d| / (|P_d| * alpha), sigma); sigma when there are no multi-word
/// candidates.
double kpminer_boost(std::size_t total_candidate_occurrences, std::size_t multiword_candidates,
                     double alpha, double sigma);

/// For each phrase, its frequency minus the frequencies of every other phrase
/// in the list that contains it as a contiguous sub-phrase, floored at 0.
std::vector<std::size_t> kpminer_refined_frequencies(
    const std::vector<std::vector<std::string>>& stems, const std::vector<std::size_t>& frequencies);

std::vector<ScoredPhrase> kpminer_extract(const ProcessedDocument& doc,
                                          const DocumentFrequencyTable& df,
                                          const KpMinerConfig& config, std::size_t k);

// ---------------------------------------------------------------------------
// YAKE

struct YakeConfig {
  std::size_t window = 1;     // co-occurrence window, tokens on each side
  std::size_t max_ngram = 3;  // candidate length bound
  double dedup_threshold = 0.8;

  void validate() const;
};

struct YakeTermFeatures {
  double casing = 1.0;
  double position = 0.0;
  double frequency = 0.0;
  double relatedness = 1.0;
  double dif_sentence = 0.0;
  double score = 0.0;
  std::size_t tf = 0;
  bool stopword = false;
};

/// (relatedness * position) / (casing + frequency / relatedness + dif_sentence / relatedness)
double yake_term_score(double casing, double position, double frequency, double relatedness,
                       double dif_sentence);

/// prod S(w) / (TF(kw) * (1 + sum S(w)))
double yake_phrase_score(std::span<const double> term_scores, std::size_t phrase_tf);

/// Features for every non-punctuation term of the document, keyed by stem.
std::unordered_map<std::string, YakeTermFeatures> yake_term_features(const ProcessedDocument& doc,
                                                                     const YakeConfig& config);

std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b);
/// 1 - distance / max(length), on codepoints; 1 for two empty strings.
double levenshtein_similarity(std::string_view a, std::string_view b);

/// Walks an already ranked list and drops any phrase whose text is at least
/// `threshold` similar to a phrase kept before it; stops after k kept.
std::vector<ScoredPhrase> dedup_levenshtein(const std::vector<ScoredPhrase>& ranked,
                                            double threshold, std::size_t k);

/// Lower score is better; output is in ascending score order.
std::vector<ScoredPhrase> yake_extract(const ProcessedDocument& doc, const YakeConfig& config,
                                       std::size_t k);

}  // namespace kpe
