#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace kpe {

enum class PosTag { Noun, Adj, Verb, Num, Punct, Other };

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

struct Token {
  std::string surface;
  std::string stem;
  PosTag pos = PosTag::Noun;
  std::size_t char_offset = 0;     // codepoint index into the normalized text
  std::size_t sentence_index = 0;
  std::size_t position = 0;        // token index across the whole document
  bool is_stopword = false;
};

struct ProcessedDocument {
  std::vector<std::vector<Token>> sentences;
  std::string source_text;

  std::size_t token_count() const;
  std::size_t word_count() const;  // tokens that are not punctuation
  // Tokens in document order; pointers stay valid while the document lives.
  std::vector<const Token*> flat() const;
};

// ---------------------------------------------------------------------------
// Normalization

/// Maps Arabic letter variants to their Persian forms, folds Arabic-Indic and
/// Persian digits to ASCII, drops kashida, collapses whitespace runs (a run
/// containing a newline becomes "\n", otherwise " "), trims the ends and keeps
/// ZWNJ only between two word characters. Idempotent.
std::string normalize_text(std::string_view raw);

// ---------------------------------------------------------------------------
// Tokenization and sentence splitting

struct RawToken {
  std::string surface;
  std::size_t char_offset = 0;

  bool operator==(const RawToken&) const = default;
};

/// Maximal runs of word characters become one token; every punctuation
/// codepoint is a token of its own; whitespace and control characters separate.
std::vector<RawToken> tokenize(std::string_view text);

struct SentenceSpan {
  std::size_t begin = 0;  // codepoints, half-open
  std::size_t end = 0;

  bool operator==(const SentenceSpan&) const = default;
};

/// Spans partition the text. A sentence ends after a run of terminators
/// ("!", "?", "؟", "؛", or "." followed by whitespace or end of text) together
/// with the whitespace that follows, or at a newline.
std::vector<SentenceSpan> split_sentences(std::string_view text);

// ---------------------------------------------------------------------------
// Stemming

struct SuffixRule {
  std::u32string suffix;
  std::size_t min_base_length = 2;
};

class Stemmer {
 public:
  Stemmer();  // built-in Persian suffix table
  explicit Stemmer(std::vector<SuffixRule> rules);

  static std::vector<SuffixRule> parse_rules(std::string_view table);

  /// Lowercases ASCII, then strips suffixes until none applies. Never empty.
  std::string stem(std::string_view surface) const;

  const std::vector<SuffixRule>& rules() const { return rules_; }

 private:
  std::vector<SuffixRule> rules_;
};

std::string stem(std::string_view surface);

// ---------------------------------------------------------------------------
// Stopwords and part of speech

class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  static StopwordList persian();
  static StopwordList parse(std::string_view text);
  static StopwordList load(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

class PosTagger {
 public:
  virtual ~PosTagger() = default;
  /// Assigns one tag per token. Tokens arrive with surface, stem and
  /// stopword flag already set.
  virtual std::vector<PosTag> tag(std::span<const Token> tokens) const = 0;
};

// Lexicon lookup (surface, then stem) with heuristics: ASCII digits are NUM,
// punctuation is PUNCT, anything unknown is NOUN.
class LexiconTagger final : public PosTagger {
 public:
  LexiconTagger();  // built-in Persian lexicon
  explicit LexiconTagger(std::unordered_map<std::string, PosTag> lexicon);

  static std::unordered_map<std::string, PosTag> parse_lexicon(std::string_view text);
  static LexiconTagger load(const std::filesystem::path& path);

  std::vector<PosTag> tag(std::span<const Token> tokens) const override;
  PosTag tag_one(const Token& token) const;

  void add(std::string word, PosTag tag) { lexicon_[std::move(word)] = tag; }

 private:
  std::unordered_map<std::string, PosTag> lexicon_;
};

void tag_pos(std::span<Token> tokens, const PosTagger& tagger);

// ---------------------------------------------------------------------------
// Full pipeline

class Analyzer {
 public:
  Analyzer();
  Analyzer(StopwordList stopwords, std::shared_ptr<const PosTagger> tagger,
           Stemmer stemmer = Stemmer());

  ProcessedDocument analyze(std::string_view raw) const;

  /// Stems of the word tokens of a short phrase (punctuation kept as is).
  std::vector<std::string> phrase_stems(std::string_view phrase) const;
  /// Normalized surfaces of the tokens of a phrase.
  std::vector<std::string> phrase_surfaces(std::string_view phrase) const;

  bool is_stopword(std::string_view word) const { return stopwords_.contains(word); }
  const Stemmer& stemmer() const { return stemmer_; }
  const StopwordList& stopwords() const { return stopwords_; }

 private:
  StopwordList stopwords_;
  std::shared_ptr<const PosTagger> tagger_;
  Stemmer stemmer_;
};

std::string join(std::span<const std::string> parts, std::string_view sep = " ");

}  // namespace kpe
