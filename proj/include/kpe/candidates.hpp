#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "kpe/text.hpp"

namespace kpe {

struct Occurrence {
  std::size_t sentence_index = 0;
  std::size_t position = 0;  // document-wide index of the first token

  bool operator==(const Occurrence&) const = default;
};

// A contiguous token span proposed as a keyphrase. Identity is the stem
// sequence: spans with equal stems merge into one candidate.
struct Candidate {
  std::vector<std::string> surface_tokens;  // from the first occurrence
  std::vector<std::string> stems;
  std::vector<Occurrence> occurrences;      // sorted by position
  std::size_t length_tokens = 0;

  std::string key() const { return join(stems); }
  std::string surface() const { return join(surface_tokens); }
  std::size_t frequency() const { return occurrences.size(); }
  std::size_t first_position() const { return occurrences.front().position; }
};

// Candidates in order of first occurrence (ties: shorter first).
using CandidateSet = std::vector<Candidate>;

inline constexpr std::size_t kNoCutoff = std::numeric_limits<std::size_t>::max();

/// Contiguous spans of at most max_n tokens inside one sentence, containing no
/// punctuation and neither starting nor ending with a stopword.
CandidateSet ngram_candidates(const ProcessedDocument& doc, std::size_t max_n = 3);

/// Maximal NOUN+ ADJ* spans inside one sentence; stopwords break spans.
CandidateSet pos_sequence_candidates(const ProcessedDocument& doc);

/// Maximal spans free of stopwords and punctuation, with all their contiguous
/// sub-spans (up to max_len tokens, 0 for no limit). A candidate is kept iff
/// it occurs at least lasf times and first occurs at a position < cutoff.
CandidateSet kpminer_candidates(const ProcessedDocument& doc, std::size_t lasf = 3,
                                std::size_t cutoff = 250, std::size_t max_len = 0);

/// Merges raw spans [begin, end) over the flattened token list into candidates.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};
CandidateSet merge_spans(const std::vector<const Token*>& tokens, const std::vector<Span>& spans);

/// True iff needle's stems occur contiguously inside haystack's stems.
bool is_subphrase(const std::vector<std::string>& needle, const std::vector<std::string>& haystack);

}  // namespace kpe
