#include <algorithm>
#include <unordered_map>

#include "kpe/candidates.hpp"

namespace kpe {

CandidateSet merge_spans(const std::vector<const Token*>& tokens, const std::vector<Span>& spans) {
  CandidateSet out;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& span : spans) {
    std::vector<std::string> stems;
    stems.reserve(span.end - span.begin);
    for (std::size_t i = span.begin; i < span.end; ++i) stems.push_back(tokens[i]->stem);
    const std::string key = join(stems);
    const Occurrence occ{tokens[span.begin]->sentence_index, tokens[span.begin]->position};
    auto [it, inserted] = index.emplace(key, out.size());
    if (inserted) {
      Candidate c;
      for (std::size_t i = span.begin; i < span.end; ++i) c.surface_tokens.push_back(tokens[i]->surface);
      c.stems = std::move(stems);
      c.length_tokens = span.end - span.begin;
      c.occurrences.push_back(occ);
      out.push_back(std::move(c));
    } else {
      out[it->second].occurrences.push_back(occ);
    }
  }
  for (auto& c : out) {
    std::sort(c.occurrences.begin(), c.occurrences.end(),
              [](const Occurrence& a, const Occurrence& b) { return a.position < b.position; });
    c.occurrences.erase(std::unique(c.occurrences.begin(), c.occurrences.end()), c.occurrences.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.first_position() != b.first_position()) return a.first_position() < b.first_position();
    return a.length_tokens < b.length_tokens;
  });
  return out;
}

namespace {

bool breaks_span(const Token& t) { return t.pos == PosTag::Punct; }

}  // namespace

CandidateSet ngram_candidates(const ProcessedDocument& doc, std::size_t max_n) {
  const auto tokens = doc.flat();
  std::vector<Span> spans;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (breaks_span(*tokens[i]) || tokens[i]->is_stopword) continue;
    for (std::size_t len = 1; len <= max_n && i + len <= tokens.size(); ++len) {
      const Token& last = *tokens[i + len - 1];
      if (breaks_span(last) || last.sentence_index != tokens[i]->sentence_index) break;
      if (last.is_stopword) continue;
      spans.push_back({i, i + len});
    }
  }
  return merge_spans(tokens, spans);
}

CandidateSet pos_sequence_candidates(const ProcessedDocument& doc) {
  const auto tokens = doc.flat();
  std::vector<Span> spans;
  auto is = [&](std::size_t j, PosTag tag, std::size_t sentence) {
    return j < tokens.size() && tokens[j]->pos == tag && !tokens[j]->is_stopword &&
           tokens[j]->sentence_index == sentence;
  };
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::size_t sentence = tokens[i]->sentence_index;
    if (!is(i, PosTag::Noun, sentence)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (is(j, PosTag::Noun, sentence)) ++j;
    while (is(j, PosTag::Adj, sentence)) ++j;
    spans.push_back({i, j});
    i = j;
  }
  return merge_spans(tokens, spans);
}

CandidateSet kpminer_candidates(const ProcessedDocument& doc, std::size_t lasf, std::size_t cutoff,
                                std::size_t max_len) {
  const auto tokens = doc.flat();
  std::vector<Span> spans;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (breaks_span(*tokens[i]) || tokens[i]->is_stopword) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < tokens.size() && !breaks_span(*tokens[j]) && !tokens[j]->is_stopword &&
           tokens[j]->sentence_index == tokens[i]->sentence_index) {
      ++j;
    }
    for (std::size_t b = i; b < j; ++b) {
      for (std::size_t e = b + 1; e <= j; ++e) {
        if (max_len && e - b > max_len) break;
        spans.push_back({b, e});
      }
    }
    i = j;
  }
  auto all = merge_spans(tokens, spans);
  CandidateSet kept;
  for (auto& c : all) {
    if (c.frequency() >= lasf && c.first_position() < cutoff) kept.push_back(std::move(c));
  }
  return kept;
}

bool is_subphrase(const std::vector<std::string>& needle, const std::vector<std::string>& haystack) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

}  // namespace kpe
