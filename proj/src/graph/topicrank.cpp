#include <cmath>

#include "kpe/graph.hpp"

namespace kpe {

double occurrence_proximity(const Candidate& a, const Candidate& b) {
  double w = 0.0;
  for (const auto& oa : a.occurrences) {
    for (const auto& ob : b.occurrences) {
      const auto gap = oa.position > ob.position ? oa.position - ob.position : ob.position - oa.position;
      if (gap > 0) w += 1.0 / static_cast<double>(gap);
    }
  }
  return w;
}

TopicGraph build_topic_graph(const ProcessedDocument& doc, double threshold) {
  TopicGraph tg;
  tg.candidates = pos_sequence_candidates(doc);
  if (tg.candidates.empty()) return tg;
  tg.clustering = cluster_topics(tg.candidates, threshold);
  const auto& topics = tg.clustering.topics;
  tg.graph = RankGraph(topics.size());
  for (const auto& topic : topics) tg.labels.push_back(tg.candidates[topic.front()].key());
  for (std::size_t a = 0; a < topics.size(); ++a) {
    for (std::size_t b = a + 1; b < topics.size(); ++b) {
      double w = 0.0;
      for (auto i : topics[a]) {
        for (auto j : topics[b]) w += occurrence_proximity(tg.candidates[i], tg.candidates[j]);
      }
      tg.graph.add_undirected(a, b, w);
    }
  }
  return tg;
}

std::vector<ScoredPhrase> topicrank_extract(const ProcessedDocument& doc, std::size_t k,
                                            double threshold) {
  const auto tg = build_topic_graph(doc, threshold);
  if (tg.candidates.empty()) return {};
  const auto tr = textrank_scores(tg.graph);
  std::vector<ScoredPhrase> scored;
  for (std::size_t t = 0; t < tg.clustering.topics.size(); ++t) {
    const Candidate* first = nullptr;
    for (auto i : tg.clustering.topics[t]) {
      const auto& c = tg.candidates[i];
      if (!first || c.first_position() < first->first_position()) first = &c;
    }
    scored.push_back(make_scored(*first, tr.scores[t]));
  }
  return top_k(std::move(scored), k);
}

}  // namespace kpe
