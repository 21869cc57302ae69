#include "kpe/text.hpp"

namespace kpe {

std::size_t ProcessedDocument::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

std::size_t ProcessedDocument::word_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) {
    for (const auto& t : s) n += t.pos != PosTag::Punct;
  }
  return n;
}

std::vector<const Token*> ProcessedDocument::flat() const {
  std::vector<const Token*> out;
  out.reserve(token_count());
  for (const auto& s : sentences) {
    for (const auto& t : s) out.push_back(&t);
  }
  return out;
}

std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

Analyzer::Analyzer()
    : stopwords_(StopwordList::persian()), tagger_(std::make_shared<LexiconTagger>()) {}

Analyzer::Analyzer(StopwordList stopwords, std::shared_ptr<const PosTagger> tagger,
                   Stemmer stemmer)
    : stopwords_(std::move(stopwords)),
      tagger_(tagger ? std::move(tagger) : std::make_shared<LexiconTagger>()),
      stemmer_(std::move(stemmer)) {}

ProcessedDocument Analyzer::analyze(std::string_view raw) const {
  ProcessedDocument doc;
  doc.source_text = normalize_text(raw);
  const auto spans = split_sentences(doc.source_text);
  auto raw_tokens = tokenize(doc.source_text);

  std::vector<Token> tokens;
  tokens.reserve(raw_tokens.size());
  std::size_t span = 0;
  std::size_t sentence = 0;
  bool sentence_open = false;
  for (auto& rt : raw_tokens) {
    while (span < spans.size() && rt.char_offset >= spans[span].end) {
      ++span;
      if (sentence_open) {
        ++sentence;
        sentence_open = false;
      }
    }
    Token t;
    t.stem = stemmer_.stem(rt.surface);
    t.is_stopword = stopwords_.contains(rt.surface);
    t.surface = std::move(rt.surface);
    t.char_offset = rt.char_offset;
    t.sentence_index = sentence;
    t.position = tokens.size();
    tokens.push_back(std::move(t));
    sentence_open = true;
  }
  tag_pos(tokens, *tagger_);

  for (auto& t : tokens) {
    if (t.sentence_index >= doc.sentences.size()) doc.sentences.resize(t.sentence_index + 1);
    doc.sentences[t.sentence_index].push_back(std::move(t));
  }
  return doc;
}

std::vector<std::string> Analyzer::phrase_stems(std::string_view phrase) const {
  std::vector<std::string> out;
  for (const auto& t : tokenize(normalize_text(phrase))) out.push_back(stemmer_.stem(t.surface));
  return out;
}

std::vector<std::string> Analyzer::phrase_surfaces(std::string_view phrase) const {
  std::vector<std::string> out;
  for (auto& t : tokenize(normalize_text(phrase))) out.push_back(std::move(t.surface));
  return out;
}

}  // namespace kpe
