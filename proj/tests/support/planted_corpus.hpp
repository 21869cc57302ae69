#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kpe/corpus.hpp"

namespace kpe::testkit {

// Synthetic news corpus whose gold keyphrases are, by construction, the most
// frequent early nouns of each body. Words are random consonant strings that
// the stemmer leaves intact and that are neither stopwords nor lexicon
// entries, so every one of them is tagged NOUN.
struct PlantedCorpusConfig {
  std::size_t documents = 200;
  std::size_t min_gold = 4;
  std::size_t max_gold = 5;
  std::size_t min_gold_repeats = 4;
  std::size_t max_gold_repeats = 6;
  std::size_t fillers_per_document = 24;
  std::size_t filler_pool = 300;
  std::uint64_t seed = 20240601;
};

std::vector<NewsRecord> planted_corpus(const PlantedCorpusConfig& config = {});

/// Distinct pseudo-words, each analyzed as a single NOUN token equal to its
/// own stem.
std::vector<std::string> pseudo_words(std::size_t count, std::uint64_t seed);

}  // namespace kpe::testkit
