#include "kpe/stat_models.hpp"

namespace kpe {

std::vector<ScoredPhrase> tfidf_extract(const ProcessedDocument& doc,
                                        const DocumentFrequencyTable& df, std::size_t k,
                                        std::size_t max_n) {
  std::vector<ScoredPhrase> scored;
  for (const auto& c : ngram_candidates(doc, max_n)) {
    const double idf = tfidf_idf(df.total_documents(), df.count(c.key()));
    scored.push_back(make_scored(c, static_cast<double>(c.frequency()) * idf));
  }
  return top_k(std::move(scored), k);
}

}  // namespace kpe
