#include "kpe/extractor.hpp"

#include <algorithm>

#include "kpe/graph.hpp"

namespace kpe {

namespace {

using ExtractFn = std::function<std::vector<ScoredPhrase>(const ProcessedDocument&, std::size_t)>;

class FunctionExtractor : public KeyphraseExtractor {
 public:
  FunctionExtractor(std::string name, ExtractFn fn) : name_(std::move(name)), fn_(std::move(fn)) {}
  std::string_view name() const override { return name_; }
  std::vector<ScoredPhrase> extract(const ProcessedDocument& doc, std::size_t k) const override {
    return fn_(doc, k);
  }

 private:
  std::string name_;
  ExtractFn fn_;
};

struct MethodInfo {
  std::string_view name;
  std::string_view label;
  bool needs_df;
  bool needs_model;
};

constexpr MethodInfo kMethods[] = {
    {"tfidf", "TFIDF", true, false},
    {"kpminer", "KPM.", true, false},
    {"yake", "YAKE", false, false},
    {"singlerank", "S.Rank", false, false},
    {"topicrank", "T.Rank", false, false},
    {"multipartiterank", "M.Rank", false, false},
    {"kea", "KEA", true, true},
};

const MethodInfo* find_method(std::string_view name) {
  for (const auto& m : kMethods) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

std::string valid_names() {
  std::string out;
  for (const auto& m : kMethods) {
    if (!out.empty()) out += ", ";
    out += m.name;
  }
  return out;
}

}  // namespace

UnknownMethodError::UnknownMethodError(const std::string& name)
    : std::invalid_argument("unknown method '" + name + "' (valid: " + valid_names() + ")") {}

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& m : kMethods) v.emplace_back(m.name);
    return v;
  }();
  return names;
}

std::string_view method_label(std::string_view name) {
  const auto* m = find_method(name);
  if (!m) throw UnknownMethodError(std::string(name));
  return m->label;
}

bool method_needs_df(std::string_view name) {
  const auto* m = find_method(name);
  if (!m) throw UnknownMethodError(std::string(name));
  return m->needs_df;
}

bool method_needs_model(std::string_view name) {
  const auto* m = find_method(name);
  if (!m) throw UnknownMethodError(std::string(name));
  return m->needs_model;
}

std::unique_ptr<KeyphraseExtractor> make_extractor(std::string_view name,
                                                   const ExtractorResources& res) {
  const auto* m = find_method(name);
  if (!m) throw UnknownMethodError(std::string(name));
  if (m->needs_df && !res.df) {
    throw std::invalid_argument(std::string(name) + " needs a document frequency table");
  }
  if (m->needs_model && !res.kea) throw std::invalid_argument(std::string(name) + " needs a trained model");

  ExtractFn fn;
  if (name == "tfidf") {
    fn = [df = res.df](const ProcessedDocument& d, std::size_t k) { return tfidf_extract(d, *df, k); };
  } else if (name == "kpminer") {
    res.kpminer.validate();
    fn = [df = res.df, cfg = res.kpminer](const ProcessedDocument& d, std::size_t k) {
      return kpminer_extract(d, *df, cfg, k);
    };
  } else if (name == "yake") {
    res.yake.validate();
    fn = [cfg = res.yake](const ProcessedDocument& d, std::size_t k) { return yake_extract(d, cfg, k); };
  } else if (name == "singlerank") {
    fn = [](const ProcessedDocument& d, std::size_t k) { return singlerank_extract(d, k); };
  } else if (name == "topicrank") {
    fn = [](const ProcessedDocument& d, std::size_t k) { return topicrank_extract(d, k); };
  } else if (name == "multipartiterank") {
    fn = [](const ProcessedDocument& d, std::size_t k) { return multipartite_extract(d, k); };
  } else {
    fn = [model = res.kea, df = res.df, sup = res.kea_suppress_subphrases](const ProcessedDocument& d,
                                                                         std::size_t k) {
      return kea_extract(*model, d, *df, k, sup);
    };
  }
  return std::make_unique<FunctionExtractor>(std::string(name), std::move(fn));
}

}  // namespace kpe
