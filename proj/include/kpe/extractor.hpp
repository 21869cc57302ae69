#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kpe/kea.hpp"
#include "kpe/ranking.hpp"
#include "kpe/stat_models.hpp"
#include "kpe/text.hpp"

namespace kpe {

class KeyphraseExtractor {
 public:
  virtual ~KeyphraseExtractor() = default;
  virtual std::string_view name() const = 0;
  /// At most k phrases, best first.
  virtual std::vector<ScoredPhrase> extract(const ProcessedDocument& doc, std::size_t k) const = 0;
};

struct ExtractorResources {
  std::shared_ptr<const DocumentFrequencyTable> df;
  std::shared_ptr<const KeaModel> kea;
  KpMinerConfig kpminer;
  YakeConfig yake;
  bool kea_suppress_subphrases = true;
};

class UnknownMethodError : public std::invalid_argument {
 public:
  explicit UnknownMethodError(const std::string& name);
};

/// tfidf, kpminer, yake, singlerank, topicrank, multipartiterank, kea
const std::vector<std::string>& method_names();
/// Row label used in benchmark tables.
std::string_view method_label(std::string_view name);
bool method_needs_df(std::string_view name);
bool method_needs_model(std::string_view name);

/// Throws UnknownMethodError for an unknown name and std::invalid_argument when
/// a required resource is missing.
std::unique_ptr<KeyphraseExtractor> make_extractor(std::string_view name,
                                                   const ExtractorResources& resources);

}  // namespace kpe
