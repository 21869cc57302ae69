#include <algorithm>
#include <set>
#include <stdexcept>

#include "kpe/graph.hpp"

namespace kpe {

namespace {

// Averages closer than this count as equal.
constexpr double kTieEpsilon = 1e-12;

}  // namespace

double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::set<std::string> sa(a.begin(), a.end());
  const std::set<std::string> sb(b.begin(), b.end());
  if (sa.empty() && sb.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& s : sa) common += sb.count(s);
  const std::size_t united = sa.size() + sb.size() - common;
  return static_cast<double>(common) / static_cast<double>(united);
}

double jaccard_stem_similarity(const Candidate& a, const Candidate& b) {
  return jaccard(a.stems, b.stems);
}

std::vector<std::size_t> TopicClustering::assignment(std::size_t item_count) const {
  std::vector<std::size_t> topic_of(item_count, 0);
  for (std::size_t t = 0; t < topics.size(); ++t) {
    for (auto i : topics[t]) topic_of.at(i) = t;
  }
  return topic_of;
}

TopicClustering cluster_average_linkage(const SimilarityMatrix& similarity, double threshold) {
  const std::size_t n = similarity.size();
  for (const auto& row : similarity) {
    if (row.size() != n) throw std::invalid_argument("similarity matrix must be square");
  }
  // Cluster ids are the smallest member index; merging b into a (a < b)
  // keeps that property.
  std::vector<std::vector<std::size_t>> members(n);
  std::vector<bool> active(n, true);
  SimilarityMatrix sum = similarity;
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};

  for (;;) {
    double best = -1.0;
    std::size_t best_a = n;
    std::size_t best_b = n;
    for (std::size_t a = 0; a < n; ++a) {
      if (!active[a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!active[b]) continue;
        const double avg = sum[a][b] / static_cast<double>(members[a].size() * members[b].size());
        if (avg > best + kTieEpsilon) {
          best = avg;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_a == n || best + kTieEpsilon < threshold) break;
    for (std::size_t c = 0; c < n; ++c) {
      sum[best_a][c] += sum[best_b][c];
      sum[c][best_a] = sum[best_a][c];
    }
    members[best_a].insert(members[best_a].end(), members[best_b].begin(), members[best_b].end());
    std::sort(members[best_a].begin(), members[best_a].end());
    members[best_b].clear();
    active[best_b] = false;
  }

  TopicClustering result;
  result.similarity_threshold = threshold;
  for (std::size_t i = 0; i < n; ++i) {
    if (active[i]) result.topics.push_back(std::move(members[i]));
  }
  return result;
}

TopicClustering cluster_topics(const CandidateSet& candidates, double threshold) {
  const std::size_t n = candidates.size();
  SimilarityMatrix sim(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sim[i][j] = sim[j][i] = jaccard_stem_similarity(candidates[i], candidates[j]);
    }
  }
  return cluster_average_linkage(sim, threshold);
}

}  // namespace kpe
