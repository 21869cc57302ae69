#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "kpe/kea.hpp"
#include "json.hpp"

namespace kpe {

double kea_tfidf(std::size_t frequency, std::size_t doc_size, std::size_t doc_count,
                 std::size_t total_documents) {
  if (doc_size == 0) return 0.0;
  const double tf = static_cast<double>(frequency) / static_cast<double>(doc_size);
  // -log2(df / N) written as log2(N / df) so that df == N gives +0
  return tf * std::log2(static_cast<double>(total_documents) / static_cast<double>(doc_count));
}

KeaFeatures kea_featurize(const ProcessedDocument& doc, const Candidate& candidate,
                          const DocumentFrequencyTable& df) {
  const std::size_t size = doc.token_count();
  KeaFeatures f;
  f.tfidf = kea_tfidf(candidate.frequency(), size, df.count(candidate.key()), df.total_documents());
  f.first_occurrence =
      size ? static_cast<double>(candidate.first_position()) / static_cast<double>(size) : 0.0;
  return f;
}

// --- discretization ---------------------------------------------------------

Discretizer Discretizer::fit(std::vector<double> values, std::size_t bins) {
  if (values.empty() || bins <= 1) return Discretizer();
  std::sort(values.begin(), values.end());
  std::vector<double> cuts;
  const std::size_t n = values.size();
  for (std::size_t i = 1; i < bins; ++i) {
    const double cut = values[i * n / bins];
    if (cut > values.front() && (cuts.empty() || cut > cuts.back())) cuts.push_back(cut);
  }
  return Discretizer(std::move(cuts));
}

std::size_t Discretizer::bin(double value) const {
  return static_cast<std::size_t>(std::upper_bound(cuts_.begin(), cuts_.end(), value) - cuts_.begin());
}

// --- model ------------------------------------------------------------------

namespace {

double smoothed(const std::vector<std::size_t>& counts, std::size_t bin, std::size_t class_total) {
  const double c = bin < counts.size() ? static_cast<double>(counts[bin]) : 0.0;
  return (c + 1.0) / (static_cast<double>(class_total) + static_cast<double>(counts.size()));
}

}  // namespace

double KeaModel::p_tfidf(std::size_t bin, bool yes) const {
  return yes ? smoothed(tfidf_yes, bin, positives) : smoothed(tfidf_no, bin, negatives);
}

double KeaModel::p_distance(std::size_t bin, bool yes) const {
  return yes ? smoothed(distance_yes, bin, positives) : smoothed(distance_no, bin, negatives);
}

bool KeaModel::operator==(const KeaModel& o) const {
  return tfidf_bins.cuts() == o.tfidf_bins.cuts() && distance_bins.cuts() == o.distance_bins.cuts() &&
         positives == o.positives && negatives == o.negatives && tfidf_yes == o.tfidf_yes &&
         tfidf_no == o.tfidf_no && distance_yes == o.distance_yes &&
         distance_no == o.distance_no && max_n == o.max_n;
}

void KeaModel::save(std::ostream& out) const {
  nlohmann::ordered_json doc;
  doc["format"] = kMagic;
  doc["version"] = kVersion;
  doc["max_n"] = max_n;
  doc["positives"] = positives;
  doc["negatives"] = negatives;
  doc["tfidf"] = {{"cuts", tfidf_bins.cuts()}, {"yes", tfidf_yes}, {"no", tfidf_no}};
  doc["distance"] = {{"cuts", distance_bins.cuts()}, {"yes", distance_yes}, {"no", distance_no}};
  out << doc.dump(2) << '\n';
}

void KeaModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  save(out);
}

KeaModel KeaModel::load(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("KEA model is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != kMagic) throw std::runtime_error("not a KEA model file");
    if (doc.at("version").get<int>() != kVersion) {
      throw std::runtime_error("unsupported KEA model version " + doc.at("version").dump());
    }
    KeaModel m;
    m.max_n = doc.at("max_n").get<std::size_t>();
    m.positives = doc.at("positives").get<std::size_t>();
    m.negatives = doc.at("negatives").get<std::size_t>();
    const auto& t = doc.at("tfidf");
    const auto& d = doc.at("distance");
    m.tfidf_bins = Discretizer(t.at("cuts").get<std::vector<double>>());
    m.tfidf_yes = t.at("yes").get<std::vector<std::size_t>>();
    m.tfidf_no = t.at("no").get<std::vector<std::size_t>>();
    m.distance_bins = Discretizer(d.at("cuts").get<std::vector<double>>());
    m.distance_yes = d.at("yes").get<std::vector<std::size_t>>();
    m.distance_no = d.at("no").get<std::vector<std::size_t>>();
    if (m.tfidf_yes.size() != m.tfidf_bins.bin_count() || m.tfidf_no.size() != m.tfidf_bins.bin_count() ||
        m.distance_yes.size() != m.distance_bins.bin_count() ||
        m.distance_no.size() != m.distance_bins.bin_count()) {
      throw std::runtime_error("KEA model bin counts do not match its cut points");
    }
    if (m.positives == 0 || m.negatives == 0) throw std::runtime_error("KEA model has an empty class");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed KEA model: ") + e.what());
  }
}

KeaModel KeaModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load(in);
}

// --- training ---------------------------------------------------------------

KeaModel kea_fit(const std::vector<KeaExample>& examples, std::size_t bins) {
  KeaModel m;
  std::vector<double> tfidf_values;
  std::vector<double> distance_values;
  for (const auto& e : examples) {
    (e.positive ? m.positives : m.negatives) += 1;
    tfidf_values.push_back(e.features.tfidf);
    distance_values.push_back(e.features.first_occurrence);
  }
  if (m.positives == 0) throw std::invalid_argument("KEA training found no positive example");
  if (m.negatives == 0) throw std::invalid_argument("KEA training found no negative example");
  m.tfidf_bins = Discretizer::fit(std::move(tfidf_values), bins);
  m.distance_bins = Discretizer::fit(std::move(distance_values), bins);
  m.tfidf_yes.assign(m.tfidf_bins.bin_count(), 0);
  m.tfidf_no.assign(m.tfidf_bins.bin_count(), 0);
  m.distance_yes.assign(m.distance_bins.bin_count(), 0);
  m.distance_no.assign(m.distance_bins.bin_count(), 0);
  for (const auto& e : examples) {
    const auto tb = m.tfidf_bins.bin(e.features.tfidf);
    const auto db = m.distance_bins.bin(e.features.first_occurrence);
    (e.positive ? m.tfidf_yes : m.tfidf_no)[tb] += 1;
    (e.positive ? m.distance_yes : m.distance_no)[db] += 1;
  }
  return m;
}

std::vector<KeaExample> kea_examples(const std::vector<NewsRecord>& records,
                                     const Analyzer& analyzer, const DocumentFrequencyTable& df,
                                     const KeaTrainingConfig& config) {
  std::vector<KeaExample> examples;
  for (const auto& record : records) {
    std::unordered_set<std::string> gold;
    for (const auto& kp : record.keyphrases) {
      gold.insert(join(config.exact_match ? analyzer.phrase_surfaces(kp) : analyzer.phrase_stems(kp)));
    }
    const auto doc = analyzer.analyze(record.body);
    for (const auto& c : ngram_candidates(doc, config.max_n)) {
      const std::string key = config.exact_match ? c.surface() : c.key();
      examples.push_back({kea_featurize(doc, c, df), gold.count(key) > 0});
    }
  }
  return examples;
}

KeaModel kea_train(const std::vector<NewsRecord>& records, const Analyzer& analyzer,
                   const DocumentFrequencyTable& df, const KeaTrainingConfig& config) {
  auto model = kea_fit(kea_examples(records, analyzer, df, config), config.bins);
  model.max_n = config.max_n;
  return model;
}

double kea_score(const KeaModel& m, const KeaFeatures& f) {
  const double total = static_cast<double>(m.positives + m.negatives);
  const auto tb = m.tfidf_bins.bin(f.tfidf);
  const auto db = m.distance_bins.bin(f.first_occurrence);
  const double yes = static_cast<double>(m.positives) / total * m.p_tfidf(tb, true) * m.p_distance(db, true);
  const double no = static_cast<double>(m.negatives) / total * m.p_tfidf(tb, false) * m.p_distance(db, false);
  return yes / (yes + no);
}

std::vector<ScoredPhrase> kea_extract(const KeaModel& model, const ProcessedDocument& doc,
                                      const DocumentFrequencyTable& df, std::size_t k,
                                      bool suppress_subphrases) {
  if (k == 0) return {};
  const auto candidates = ngram_candidates(doc, model.max_n);
  std::unordered_map<std::string, std::size_t> by_key;
  std::vector<ScoredPhrase> scored;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    scored.push_back(make_scored(candidates[i], kea_score(model, kea_featurize(doc, candidates[i], df))));
    by_key.emplace(scored.back().key, i);
  }
  rank(scored);

  std::vector<ScoredPhrase> out;
  std::vector<const Candidate*> kept;
  for (auto& p : scored) {
    if (out.size() >= k) break;
    const Candidate& c = candidates[by_key.at(p.key)];
    if (suppress_subphrases &&
        std::any_of(kept.begin(), kept.end(),
                    [&](const Candidate* q) { return is_subphrase(c.stems, q->stems); })) {
      continue;
    }
    kept.push_back(&c);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace kpe
