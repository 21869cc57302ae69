#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "kpe/stat_models.hpp"

namespace kpe {

void KpMinerConfig::validate() const {
  if (lasf < 1) throw std::invalid_argument("KP-Miner lasf must be >= 1");
  if (cutoff < 1) throw std::invalid_argument("KP-Miner cutoff must be >= 1");
  if (!(alpha > 0)) throw std::invalid_argument("KP-Miner alpha must be > 0");
  if (!(sigma > 0)) throw std::invalid_argument("KP-Miner sigma must be > 0");
}

double kpminer_idf(std::size_t total_documents, std::size_t doc_count) {
  return std::log2(static_cast<double>(total_documents) / static_cast<double>(doc_count));
}

double kpminer_boost(std::size_t total_candidate_occurrences, std::size_t multiword_candidates,
                     double alpha, double sigma) {
  if (multiword_candidates == 0) return sigma;
  const double raw = static_cast<double>(total_candidate_occurrences) /
                     (static_cast<double>(multiword_candidates) * alpha);
  return std::min(raw, sigma);
}

std::vector<std::size_t> kpminer_refined_frequencies(
    const std::vector<std::vector<std::string>>& stems, const std::vector<std::size_t>& frequencies) {
  std::vector<std::size_t> refined = frequencies;
  for (std::size_t i = 0; i < stems.size(); ++i) {
    std::size_t decrement = 0;
    for (std::size_t j = 0; j < stems.size(); ++j) {
      if (i != j && stems[j].size() > stems[i].size() && is_subphrase(stems[i], stems[j])) {
        decrement += frequencies[j];
      }
    }
    refined[i] = decrement >= frequencies[i] ? 0 : frequencies[i] - decrement;
  }
  return refined;
}

std::vector<ScoredPhrase> kpminer_extract(const ProcessedDocument& doc,
                                          const DocumentFrequencyTable& df,
                                          const KpMinerConfig& config, std::size_t k) {
  config.validate();
  const auto candidates =
      kpminer_candidates(doc, config.lasf, config.cutoff, config.max_phrase_tokens);
  if (candidates.empty() || k == 0) return {};

  std::size_t occurrences = 0;
  std::size_t multiword = 0;
  for (const auto& c : candidates) {
    occurrences += c.frequency();
    multiword += c.length_tokens > 1;
  }
  const double boost = kpminer_boost(occurrences, multiword, config.alpha, config.sigma);

  // weight without the frequency term, so refinement can rescale tf alone
  auto unit_weight = [&](const Candidate& c) {
    const double idf = kpminer_idf(df.total_documents(), df.count(c.key()));
    return idf * (c.length_tokens > 1 ? boost : 1.0) * config.position_factor;
  };

  std::unordered_map<std::string, std::size_t> by_key;
  std::vector<double> unit(candidates.size());
  std::vector<ScoredPhrase> scored;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    unit[i] = unit_weight(candidates[i]);
    scored.push_back(make_scored(candidates[i], static_cast<double>(candidates[i].frequency()) * unit[i]));
    by_key.emplace(scored.back().key, i);
  }
  auto top = top_k(std::move(scored), k);

  std::vector<std::vector<std::string>> stems;
  std::vector<std::size_t> freqs;
  std::vector<double> units;
  for (const auto& p : top) {
    const std::size_t i = by_key.at(p.key);
    stems.push_back(candidates[i].stems);
    freqs.push_back(candidates[i].frequency());
    units.push_back(unit[i]);
  }
  const auto refined = kpminer_refined_frequencies(stems, freqs);
  for (std::size_t i = 0; i < top.size(); ++i) {
    top[i].score = static_cast<double>(refined[i]) * units[i];
  }
  rank(top);
  return top;
}

}  // namespace kpe
