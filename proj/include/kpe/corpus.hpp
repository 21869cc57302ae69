#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kpe/text.hpp"

namespace kpe {

struct NewsRecord {
  std::string title;
  std::string body;
  std::string summary;
  std::vector<std::string> keyphrases;
  std::string category;
  std::string url;

  bool operator==(const NewsRecord&) const = default;
};

// ---------------------------------------------------------------------------
// Loading

struct LineRejection {
  std::size_t line = 0;  // 1-based
  std::string reason;
};

struct LoadResult {
  std::vector<NewsRecord> records;
  std::vector<LineRejection> rejected;
  std::vector<std::string> warnings;
};

/// Reads one JSON object per line. Malformed lines are reported and skipped.
/// Blank lines are ignored. When a url repeats, the later record replaces the
/// earlier one and a warning is recorded. Throws std::runtime_error if the
/// stream itself fails.
LoadResult load_records(std::istream& in);
LoadResult load_records_file(const std::string& path);

std::string to_json_line(const NewsRecord& record);
void write_records(std::ostream& out, const std::vector<NewsRecord>& records);

// ---------------------------------------------------------------------------
// Cleaning filters

struct FilterConfig {
  std::size_t min_body_tokens = 40;
  std::size_t max_body_tokens = 500;
  std::size_t min_keyphrases = 2;
  std::size_t min_keyphrase_chars = 3;
  std::size_t max_keyphrase_tokens = 7;

  /// Throws std::invalid_argument when a bound is zero or min > max.
  void validate() const;
};

namespace rule {
inline constexpr std::string_view kBodyTokens = "body_tokens";
inline constexpr std::string_view kMinKeyphrases = "min_keyphrases";
inline constexpr std::string_view kKeyphraseChars = "keyphrase_chars";
inline constexpr std::string_view kKeyphraseTokens = "keyphrase_tokens";
}  // namespace rule

struct FilterRejection {
  std::string url;
  std::string rule;
  std::string detail;
};

struct FilterResult {
  std::vector<NewsRecord> kept;
  std::vector<FilterRejection> rejections;
};

/// Word tokens (punctuation excluded) of the normalized body.
std::size_t body_token_count(std::string_view body);
/// Codepoints of the normalized keyphrase.
std::size_t keyphrase_char_count(std::string_view keyphrase);
std::size_t keyphrase_token_count(std::string_view keyphrase);

/// Keeps a record iff its body has [min, max] word tokens, it has at least
/// min_keyphrases keyphrases, and every keyphrase satisfies the character and
/// token limits. A rejection names the first violated rule in that order.
FilterResult apply_filters(const std::vector<NewsRecord>& records,
                           const FilterConfig& config = {});

void write_audit(std::ostream& out, const std::vector<FilterRejection>& rejections);

// ---------------------------------------------------------------------------
// Presence of gold keyphrases in the body

struct KeyphrasePresence {
  std::string keyphrase;
  bool present = false;
};

/// A keyphrase is present iff its stem sequence occurs contiguously in the
/// body's stem sequence.
std::vector<KeyphrasePresence> keyphrase_presence(const NewsRecord& record,
                                                  const Analyzer& analyzer);
bool contains_sequence(std::span<const std::string> haystack, std::span<const std::string> needle);

// ---------------------------------------------------------------------------
// Statistics

struct HistogramBucket {
  std::string label;
  std::size_t count = 0;
};

// Buckets partition the value range: [lo, e1), [e1, e2) ... and, when
// requested, under/overflow buckets for values outside the covered range.
class Histogram {
 public:
  Histogram() = default;
  /// Interval buckets from consecutive edges; the last interval is closed
  /// when close_last is set.
  static Histogram from_edges(std::vector<std::size_t> edges, bool close_last);
  /// One bucket per integer value in [lo, hi] plus "hi+" for values above.
  static Histogram from_values(std::size_t lo, std::size_t hi, bool overflow_label_plus);

  void add(std::size_t value, std::size_t times = 1);
  void merge(const Histogram& other);

  std::vector<HistogramBucket> buckets() const;  // empty under/overflow omitted
  std::size_t total() const;
  std::size_t underflow() const { return underflow_; }
  std::size_t overflow() const { return overflow_; }

 private:
  std::vector<std::size_t> edges_;
  std::vector<std::size_t> counts_;
  bool close_last_ = false;
  bool discrete_ = false;
  bool plus_label_ = false;
  std::size_t underflow_ = 0;
  std::size_t overflow_ = 0;
};

struct CorpusStats {
  std::size_t record_count = 0;
  std::size_t keyphrase_count = 0;
  std::map<std::string, std::size_t> per_source_counts;
  Histogram body_token_histogram;
  Histogram keyphrase_count_histogram;
  Histogram keyphrase_char_histogram;
  Histogram keyphrase_token_histogram;
  std::size_t present_count = 0;
  std::size_t absent_count = 0;

  CorpusStats();
};

/// Host part of a url with "www." removed; "unknown" when there is none.
std::string source_of(std::string_view url);

CorpusStats compute_stats(const std::vector<NewsRecord>& records, const Analyzer& analyzer);

/// Percentage with two decimals, 0 for an empty population.
double percent(std::size_t count, std::size_t total);

std::string render_stats_text(const CorpusStats& stats);
std::string render_stats_json(const CorpusStats& stats);

// ---------------------------------------------------------------------------
// Splitting

struct CorpusSplit {
  std::vector<NewsRecord> train;
  std::vector<NewsRecord> validation;
  std::vector<NewsRecord> test;
};

inline constexpr std::size_t kDefaultTestSize = 25000;
inline constexpr std::size_t kDefaultValidationSize = 25000;

/// Seeded shuffle; the first test_size shuffled records form the test set, the
/// next val_size the validation set, the rest the training set. Each part keeps
/// the input order. Throws std::invalid_argument when the sizes exceed the
/// corpus.
CorpusSplit split_corpus(const std::vector<NewsRecord>& records, std::size_t test_size,
                         std::size_t val_size, std::uint64_t seed);

/// Seeded permutation of [0, n), reproducible across platforms.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

}  // namespace kpe
