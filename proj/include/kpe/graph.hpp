#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kpe/candidates.hpp"
#include "kpe/ranking.hpp"
#include "kpe/text.hpp"

namespace kpe {

// ---------------------------------------------------------------------------
// Weighted digraph and TextRank

// Dense node indices 0..n-1, non-negative weights, no self-loops. Repeated
// add_edge calls on the same pair accumulate.
class RankGraph {
 public:
  struct Edge {
    std::size_t to;
    double weight;
  };

  explicit RankGraph(std::size_t nodes = 0) : out_(nodes), in_(nodes) {}

  std::size_t node_count() const { return out_.size(); }
  std::size_t edge_count() const;

  /// Throws std::invalid_argument for self-loops, negative weights or
  /// out-of-range nodes. Zero weights are ignored.
  void add_edge(std::size_t from, std::size_t to, double weight);
  void add_undirected(std::size_t a, std::size_t b, double weight);

  double weight(std::size_t from, std::size_t to) const;
  void scale_incoming(std::size_t node, double factor);

  const std::vector<Edge>& successors(std::size_t node) const { return out_[node]; }
  const std::vector<Edge>& predecessors(std::size_t node) const { return in_[node]; }
  double out_weight(std::size_t node) const;

 private:
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;  // Edge::to holds the source node here
};

struct TextRankResult {
  std::vector<double> scores;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> max_changes;  // per iteration
};

inline constexpr double kDamping = 0.85;

/// Iterates S(i) = (1 - lambda) + lambda * sum_{j in In(i)} w_ji S(j) / Out(j)
/// synchronously from S = 1 until the largest per-node change is below tol.
TextRankResult textrank_scores(const RankGraph& graph, double lambda = kDamping,
                               double tol = 1e-12, std::size_t max_iter = 1000);

void write_graph_dump(std::ostream& out, const RankGraph& graph,
                      const std::vector<std::string>& labels);

// ---------------------------------------------------------------------------
// Topic clustering

/// |stems(a) ∩ stems(b)| / |stems(a) ∪ stems(b)| over stem sets.
double jaccard_stem_similarity(const Candidate& a, const Candidate& b);
double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

using SimilarityMatrix = std::vector<std::vector<double>>;

struct TopicClustering {
  std::vector<std::vector<std::size_t>> topics;  // each sorted; topics ordered by first member
  double similarity_threshold = 0.25;

  std::vector<std::size_t> assignment(std::size_t item_count) const;
};

inline constexpr double kTopicThreshold = 0.25;

/// Average-linkage agglomerative clustering. Repeatedly merges the pair of
/// clusters with the highest mean pairwise similarity (ties: lowest pair of
/// smallest member indices) while that similarity is >= threshold.
TopicClustering cluster_average_linkage(const SimilarityMatrix& similarity, double threshold);

TopicClustering cluster_topics(const CandidateSet& candidates, double threshold = kTopicThreshold);

// ---------------------------------------------------------------------------
// Extractors

struct WordGraph {
  RankGraph graph;
  std::vector<std::string> labels;  // node stems
};

/// Noun/adjective words linked by co-occurrence count within `window` tokens.
WordGraph build_singlerank_graph(const ProcessedDocument& doc, std::size_t window = 10);

std::vector<ScoredPhrase> singlerank_extract(const ProcessedDocument& doc, std::size_t k,
                                             std::size_t window = 10);

/// sum over occurrence pairs of 1 / |p_i - p_j|
double occurrence_proximity(const Candidate& a, const Candidate& b);

struct TopicGraph {
  CandidateSet candidates;
  TopicClustering clustering;
  RankGraph graph;  // one node per topic
  std::vector<std::string> labels;
};

TopicGraph build_topic_graph(const ProcessedDocument& doc, double threshold = kTopicThreshold);

std::vector<ScoredPhrase> topicrank_extract(const ProcessedDocument& doc, std::size_t k,
                                            double threshold = kTopicThreshold);

struct MultipartiteGraph {
  CandidateSet candidates;
  TopicClustering clustering;
  RankGraph graph;  // one node per candidate
  std::vector<std::string> labels;
};

/// Candidates linked in both directions iff they belong to different topics,
/// weighted by occurrence_proximity. No position adjustment.
MultipartiteGraph build_multipartite_graph(const ProcessedDocument& doc,
                                           double threshold = kTopicThreshold);

/// Multiplies the incoming edge weights of each topic's first-occurring
/// candidate by alpha * exp(1 / (1 + p)), p its first position.
void adjust_multipartite_weights(RankGraph& graph, const CandidateSet& candidates,
                                 const TopicClustering& clustering, double alpha);

std::vector<ScoredPhrase> multipartite_extract(const ProcessedDocument& doc, std::size_t k,
                                               double alpha_boost = 1.1,
                                               double threshold = kTopicThreshold);

}  // namespace kpe
