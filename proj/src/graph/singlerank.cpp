#include <cstdint>
#include <unordered_map>

#include "kpe/graph.hpp"

namespace kpe {

namespace {

bool is_graph_word(const Token& t) {
  return !t.is_stopword && (t.pos == PosTag::Noun || t.pos == PosTag::Adj);
}

}  // namespace

WordGraph build_singlerank_graph(const ProcessedDocument& doc, std::size_t window) {
  const auto tokens = doc.flat();
  WordGraph wg;
  std::unordered_map<std::string, std::size_t> node_of;
  std::vector<std::size_t> token_node(tokens.size(), SIZE_MAX);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_graph_word(*tokens[i])) continue;
    auto [it, inserted] = node_of.emplace(tokens[i]->stem, wg.labels.size());
    if (inserted) wg.labels.push_back(tokens[i]->stem);
    token_node[i] = it->second;
  }
  wg.graph = RankGraph(wg.labels.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (token_node[i] == SIZE_MAX) continue;
    for (std::size_t j = i + 1; j < tokens.size() && j < i + window; ++j) {
      if (token_node[j] == SIZE_MAX || token_node[j] == token_node[i]) continue;
      wg.graph.add_undirected(token_node[i], token_node[j], 1.0);
    }
  }
  return wg;
}

std::vector<ScoredPhrase> singlerank_extract(const ProcessedDocument& doc, std::size_t k,
                                             std::size_t window) {
  const auto wg = build_singlerank_graph(doc, window);
  const auto tr = textrank_scores(wg.graph);
  std::unordered_map<std::string, double> word_score;
  for (std::size_t i = 0; i < wg.labels.size(); ++i) word_score[wg.labels[i]] = tr.scores[i];

  std::vector<ScoredPhrase> scored;
  for (const auto& c : pos_sequence_candidates(doc)) {
    double s = 0.0;
    for (const auto& stem : c.stems) {
      if (auto it = word_score.find(stem); it != word_score.end()) s += it->second;
    }
    scored.push_back(make_scored(c, s));
  }
  return top_k(std::move(scored), k);
}

}  // namespace kpe
