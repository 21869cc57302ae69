#include <cmath>

#include "kpe/graph.hpp"

namespace kpe {

MultipartiteGraph build_multipartite_graph(const ProcessedDocument& doc, double threshold) {
  MultipartiteGraph mg;
  mg.candidates = pos_sequence_candidates(doc);
  const std::size_t n = mg.candidates.size();
  mg.graph = RankGraph(n);
  if (n == 0) return mg;
  mg.clustering = cluster_topics(mg.candidates, threshold);
  const auto topic_of = mg.clustering.assignment(n);
  for (const auto& c : mg.candidates) mg.labels.push_back(c.key());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (topic_of[i] == topic_of[j]) continue;
      mg.graph.add_undirected(i, j, occurrence_proximity(mg.candidates[i], mg.candidates[j]));
    }
  }
  return mg;
}

void adjust_multipartite_weights(RankGraph& graph, const CandidateSet& candidates,
                                 const TopicClustering& clustering, double alpha) {
  for (const auto& topic : clustering.topics) {
    std::size_t first = topic.front();
    for (auto i : topic) {
      if (candidates[i].first_position() < candidates[first].first_position()) first = i;
    }
    const double p = static_cast<double>(candidates[first].first_position());
    graph.scale_incoming(first, alpha * std::exp(1.0 / (1.0 + p)));
  }
}

std::vector<ScoredPhrase> multipartite_extract(const ProcessedDocument& doc, std::size_t k,
                                               double alpha_boost, double threshold) {
  auto mg = build_multipartite_graph(doc, threshold);
  if (mg.candidates.empty()) return {};
  adjust_multipartite_weights(mg.graph, mg.candidates, mg.clustering, alpha_boost);
  const auto tr = textrank_scores(mg.graph);
  std::vector<ScoredPhrase> scored;
  for (std::size_t i = 0; i < mg.candidates.size(); ++i) {
    scored.push_back(make_scored(mg.candidates[i], tr.scores[i]));
  }
  return top_k(std::move(scored), k);
}

}  // namespace kpe
