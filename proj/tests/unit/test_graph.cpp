#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kpe/graph.hpp"
#include "oracles.hpp"
#include "planted_corpus.hpp"
#include "toy_analyzer.hpp"

using namespace kpe;

namespace {

RankGraph from_dense(const std::vector<std::vector<double>>& w) {
  RankGraph g(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[i][j] > 0) g.add_edge(i, j, w[i][j]);
    }
  }
  return g;
}

std::vector<std::vector<double>> to_dense(const RankGraph& g) {
  std::vector<std::vector<double>> w(g.node_count(), std::vector<double>(g.node_count(), 0.0));
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (const auto& e : g.successors(i)) w[i][e.to] = e.weight;
  }
  return w;
}

std::vector<std::size_t> argsort(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return idx;
}

std::vector<std::string> keys(const std::vector<ScoredPhrase>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.key);
  return out;
}

Candidate candidate(std::vector<std::string> stems) {
  Candidate c;
  c.surface_tokens = stems;
  c.length_tokens = stems.size();
  c.stems = std::move(stems);
  c.occurrences.push_back({0, 0});
  return c;
}

}  // namespace

// --- RankGraph ----------------------------------------------------------------

TEST(RankGraph, RejectsInvalidEdges) {
  RankGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3, 1.0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1, -0.5), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1, std::nan("")), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1, INFINITY), std::invalid_argument);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(RankGraph, AccumulatesAndIgnoresZeroWeights) {
  RankGraph g(3);
  g.add_edge(0, 1, 0.0);
  EXPECT_EQ(g.edge_count(), 0u);
  g.add_edge(0, 1, 1.5);
  g.add_edge(0, 1, 2.0);
  g.add_undirected(1, 2, 1.0);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 3.5);
  EXPECT_DOUBLE_EQ(g.weight(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(g.out_weight(1), 1.0);
  ASSERT_EQ(g.predecessors(1).size(), 2u);
  EXPECT_EQ(g.predecessors(1)[0].to, 0u);
  EXPECT_DOUBLE_EQ(g.predecessors(1)[0].weight, 3.5);
}

TEST(RankGraph, ScaleIncomingKeepsBothAdjacencyViewsInSync) {
  RankGraph g(3);
  g.add_undirected(0, 1, 2.0);
  g.add_edge(2, 1, 1.0);
  g.scale_incoming(1, 3.0);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 6.0);
  EXPECT_DOUBLE_EQ(g.weight(2, 1), 3.0);
  EXPECT_DOUBLE_EQ(g.weight(1, 0), 2.0);
  double in = 0.0;
  for (const auto& e : g.predecessors(1)) in += e.weight;
  EXPECT_DOUBLE_EQ(in, 9.0);
}

TEST(RankGraph, DumpListsNodesAndEdges) {
  RankGraph g(2);
  g.add_edge(0, 1, 0.5);
  std::ostringstream out;
  write_graph_dump(out, g, {"oil", "gas"});
  EXPECT_EQ(out.str(), "# nodes 2\nnode\t0\toil\nnode\t1\tgas\n# edges 1\nedge\t0\t1\t0.5\n");
}

// --- TextRank -----------------------------------------------------------------

TEST(TextRank, IsolatedNodeScoresOneMinusLambda) {
  RankGraph g(3);
  g.add_undirected(0, 1, 1.0);
  const auto r = textrank_scores(g);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.scores[2], 0.15, 1e-15);
}

TEST(TextRank, SymmetricPairScoresEqual) {
  RankGraph g(2);
  g.add_undirected(0, 1, 1.0);
  const auto r = textrank_scores(g);
  EXPECT_DOUBLE_EQ(r.scores[0], r.scores[1]);
}

TEST(TextRank, ThreeNodeGraphMatchesDenseOracle) {
  const std::vector<std::vector<double>> w{{0, 2, 1}, {1, 0, 0}, {0, 3, 0}};
  const auto r = textrank_scores(from_dense(w));
  const auto oracle = testkit::dense_textrank(w, 0.85, 100);
  ASSERT_TRUE(r.converged);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r.scores[i], oracle[i], 1e-6);
}

TEST(TextRank, EmptyGraph) {
  const auto r = textrank_scores(RankGraph(0));
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(r.scores.empty());
}

TEST(TextRank, ReportsNonConvergence) {
  RankGraph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  g.add_edge(2, 0, 1.0);
  g.add_edge(0, 2, 0.1);
  const auto r = textrank_scores(g, 0.85, 1e-300, 5);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 5u);
  EXPECT_EQ(r.max_changes.size(), 5u);
}

TEST(TextRank, FuzzedGraphsMatchOracleAndBounds) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const auto w = testkit::random_digraph(n, rng);
    const auto r = textrank_scores(from_dense(w));
    ASSERT_TRUE(r.converged);
    const auto oracle = testkit::dense_textrank(w, 0.85, 500);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(r.scores[i], oracle[i], 1e-6);
      EXPECT_GE(r.scores[i], 0.15 - 1e-12);
    }
  }
}

TEST(TextRank, TotalChangeContractsByLambda) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const auto g = from_dense(testkit::random_digraph(n, rng));
    std::vector<double> prev(n, 1.0);
    double prev_delta = -1.0;
    for (std::size_t t = 1; t <= 30; ++t) {
      const auto cur = textrank_scores(g, 0.85, 1e-300, t).scores;
      double delta = 0.0;
      for (std::size_t i = 0; i < n; ++i) delta += std::abs(cur[i] - prev[i]);
      if (prev_delta >= 0) {
        EXPECT_LE(delta, 0.85 * prev_delta + 1e-12) << "trial " << trial << " step " << t;
      }
      prev_delta = delta;
      prev = cur;
    }
  }
}

TEST(TextRank, UniformScalingPreservesRanking) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 15;
    auto w = testkit::random_digraph(n, rng);
    const auto base = textrank_scores(from_dense(w));
    const double factor = 0.01 + static_cast<double>(rng() % 1000) / 10.0;
    for (auto& row : w) {
      for (auto& x : row) x *= factor;
    }
    const auto scaled = textrank_scores(from_dense(w));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(base.scores[i], scaled.scores[i], 1e-9);
    // ties can reorder under rounding, so compare rankings on clearly separated scores
    const auto order = argsort(base.scores);
    for (std::size_t i = 1; i < n; ++i) {
      if (base.scores[order[i - 1]] - base.scores[order[i]] > 1e-9) {
        EXPECT_GT(scaled.scores[order[i - 1]], scaled.scores[order[i]]);
      }
    }
  }
}

// --- clustering ---------------------------------------------------------------

TEST(Jaccard, SetSemantics) {
  EXPECT_DOUBLE_EQ(jaccard({"a", "b"}, {"b", "a"}), 1.0);
  EXPECT_DOUBLE_EQ(jaccard({"a", "b"}, {"c", "d"}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard({"a", "b"}, {"b", "c"}), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(jaccard({"a", "a", "b"}, {"a", "b"}), 1.0);
  EXPECT_DOUBLE_EQ(jaccard_stem_similarity(candidate({"oil", "price"}), candidate({"oil"})), 0.5);
}

TEST(Clustering, IdenticalStemsFormOneTopic) {
  const CandidateSet cs{candidate({"oil", "price"}), candidate({"price", "oil"}), candidate({"oil", "price", "oil"})};
  const auto t = cluster_topics(cs);
  ASSERT_EQ(t.topics.size(), 1u);
  EXPECT_EQ(t.topics[0], (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Clustering, DisjointStemsStaySingletons) {
  const CandidateSet cs{candidate({"oil"}), candidate({"gas"}), candidate({"coal", "mine"})};
  const auto t = cluster_topics(cs);
  EXPECT_EQ(t.topics.size(), 3u);
  EXPECT_EQ(t.assignment(3), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Clustering, HandBuiltMatrixMatchesOracle) {
  // 0-1 merge first (0.9); then {0,1} vs 2 averages (0.3 + 0.5) / 2 = 0.4 and
  // wins over 2-3 at 0.35; 3 stays alone since its average to {0,1,2} is 0.1.
  const SimilarityMatrix m{{1, 0.9, 0.3, 0.1}, {0.9, 1, 0.5, 0.1}, {0.3, 0.5, 1, 0.35}, {0.1, 0.1, 0.35, 1}};
  const auto t = cluster_average_linkage(m, 0.25);
  EXPECT_EQ(t.topics, (std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}}));
  EXPECT_EQ(t.topics, testkit::exhaustive_average_linkage(m, 0.25));
}

TEST(Clustering, TiesGoToTheLowestPair) {
  const SimilarityMatrix m{{1, 0.5, 0, 0}, {0.5, 1, 0, 0}, {0, 0, 1, 0.5}, {0, 0, 0.5, 1}};
  EXPECT_EQ(cluster_average_linkage(m, 0.25).topics,
            (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}}));
  const SimilarityMatrix chain{{1, 0.5, 0}, {0.5, 1, 0.5}, {0, 0.5, 1}};
  // 0-1 merges first; {0,1} vs 2 then averages 0.25, which still meets the threshold
  EXPECT_EQ(cluster_average_linkage(chain, 0.25).topics, (std::vector<std::vector<std::size_t>>{{0, 1, 2}}));
  EXPECT_EQ(cluster_average_linkage(chain, 0.3).topics,
            (std::vector<std::vector<std::size_t>>{{0, 1}, {2}}));
}

TEST(Clustering, RejectsNonSquareMatrix) {
  EXPECT_THROW(cluster_average_linkage({{1, 0}, {0}}, 0.25), std::invalid_argument);
}

TEST(Clustering, FuzzedMatricesMatchOracleAndPartition) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const bool quantized = trial % 2 == 0;
    const auto m = testkit::random_similarity(n, rng, quantized);
    const double threshold = quantized ? static_cast<double>(rng() % 9) / 8.0 : 0.25;
    const auto t = cluster_average_linkage(m, threshold);
    EXPECT_EQ(t.topics, testkit::exhaustive_average_linkage(m, threshold)) << "trial " << trial;
    std::vector<std::size_t> all;
    for (const auto& topic : t.topics) {
      EXPECT_TRUE(std::is_sorted(topic.begin(), topic.end()));
      all.insert(all.end(), topic.begin(), topic.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expected(n);
    std::iota(expected.begin(), expected.end(), 0);
    EXPECT_EQ(all, expected);
    EXPECT_EQ(cluster_average_linkage(m, threshold).topics, t.topics);
  }
}

// --- SingleRank ---------------------------------------------------------------

TEST(SingleRank, SingleNounIsTheOnlyKeyphrase) {
  const auto out = singlerank_extract(testkit::toy_analyzer().analyze("the oil"), 10);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].key, "oil");
  EXPECT_DOUBLE_EQ(out[0].score, 0.15);
}

TEST(SingleRank, SymmetricNounsScoreEqually) {
  const auto wg = build_singlerank_graph(testkit::toy_analyzer().analyze("oil gas"), 10);
  ASSERT_EQ(wg.labels.size(), 2u);
  const auto r = textrank_scores(wg.graph);
  EXPECT_DOUBLE_EQ(r.scores[0], r.scores[1]);
}

TEST(SingleRank, ToyDocumentMatchesHandBuiltGraph) {
  const auto doc = testkit::toy_analyzer().analyze("oil market big price oil");
  const auto wg = build_singlerank_graph(doc, 10);
  ASSERT_EQ(wg.labels, (std::vector<std::string>{"oil", "market", "big", "price"}));
  // oil pairs with every other word twice (once on each side); the rest once
  const std::vector<std::vector<double>> w{{0, 2, 2, 2}, {2, 0, 1, 1}, {2, 1, 0, 1}, {2, 1, 1, 0}};
  EXPECT_EQ(to_dense(wg.graph), w);
  const auto s = testkit::dense_textrank(w, 0.85, 500);
  const auto out = singlerank_extract(doc, 10);
  ASSERT_EQ(keys(out), (std::vector<std::string>{"oil market big", "price oil"}));
  EXPECT_NEAR(out[0].score, s[0] + s[1] + s[2], 1e-9);
  EXPECT_NEAR(out[1].score, s[3] + s[0], 1e-9);
}

TEST(SingleRank, WindowLimitsCooccurrence) {
  const auto doc = testkit::toy_analyzer().analyze("oil market price gas");
  const auto wg = build_singlerank_graph(doc, 2);
  EXPECT_EQ(wg.graph.edge_count(), 6u);
  EXPECT_DOUBLE_EQ(wg.graph.weight(0, 2), 0.0);
}

// --- TopicRank ----------------------------------------------------------------

TEST(TopicRank, SingleTopicYieldsItsEarliestCandidate) {
  const auto out = topicrank_extract(testkit::toy_analyzer().analyze("the of and in oil market the of and oil"), 10);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].key, "oil market");
  EXPECT_EQ(out[0].first_position, 4u);
}

TEST(TopicRank, EarlyDenseTopicRanksFirst) {
  const auto doc = testkit::toy_analyzer().analyze("oil, oil price, oil. the of and in the of and in gas");
  const auto tg = build_topic_graph(doc);
  ASSERT_EQ(tg.clustering.topics.size(), 2u);
  const auto oracle = testkit::dense_textrank(to_dense(tg.graph), 0.85, 500);
  const auto out = topicrank_extract(doc, 10);
  ASSERT_EQ(keys(out), (std::vector<std::string>{"oil", "gas"}));
  EXPECT_NEAR(out[0].score, oracle[0], 1e-9);
}

TEST(TopicRank, EdgesSumReciprocalOffsetsAcrossTopics) {
  const auto doc = testkit::toy_analyzer().analyze("oil, gas, oil price");
  const auto tg = build_topic_graph(doc);
  ASSERT_EQ(tg.labels, (std::vector<std::string>{"oil", "gas"}));
  // oil at 0, gas at 2, oil price at 4
  EXPECT_NEAR(tg.graph.weight(0, 1), 1.0 / 2 + 1.0 / 2, 1e-15);
  EXPECT_NEAR(tg.graph.weight(1, 0), 1.0, 1e-15);
}

TEST(TopicRank, FewerTopicsThanKReturnsAll) {
  EXPECT_EQ(topicrank_extract(testkit::toy_analyzer().analyze("oil, gas, coal"), 10).size(), 3u);
  EXPECT_TRUE(topicrank_extract(testkit::toy_analyzer().analyze("the big"), 10).empty());
}

TEST(Proximity, SumsOverOccurrencePairs) {
  Candidate a = candidate({"a"});
  Candidate b = candidate({"b"});
  a.occurrences = {{0, 0}, {0, 4}};
  b.occurrences = {{0, 2}, {0, 4}};
  // |0-2| + |0-4| + |4-2|, equal positions contribute nothing
  EXPECT_NEAR(occurrence_proximity(a, b), 0.5 + 0.25 + 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(occurrence_proximity(a, b), occurrence_proximity(b, a));
}

// --- MultipartiteRank ---------------------------------------------------------

TEST(Multipartite, NoEdgesInsideATopic) {
  const auto mg = build_multipartite_graph(testkit::toy_analyzer().analyze("oil price, oil, gas"));
  ASSERT_EQ(mg.labels, (std::vector<std::string>{"oil price", "oil", "gas"}));
  EXPECT_DOUBLE_EQ(mg.graph.weight(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(mg.graph.weight(1, 0), 0.0);
  EXPECT_GT(mg.graph.weight(0, 2), 0.0);
  EXPECT_GT(mg.graph.weight(1, 2), 0.0);
}

TEST(Multipartite, GraphIsMultipartiteOnRealisticDocuments) {
  for (const auto& r : testkit::planted_corpus({.documents = 10, .seed = 29})) {
    const auto mg = build_multipartite_graph(Analyzer().analyze(r.body));
    const auto topic_of = mg.clustering.assignment(mg.candidates.size());
    for (std::size_t i = 0; i < mg.graph.node_count(); ++i) {
      for (const auto& e : mg.graph.successors(i)) EXPECT_NE(topic_of[i], topic_of[e.to]);
    }
  }
}

TEST(Multipartite, AdjustmentPromotesFirstOccurringCandidate) {
  // two topics of two candidates each, laid out as mirror images
  const auto doc = testkit::toy_analyzer().analyze("oil price, gas, gas coal, oil");
  auto mg = build_multipartite_graph(doc);
  ASSERT_EQ(mg.labels, (std::vector<std::string>{"oil price", "gas", "gas coal", "oil"}));
  const auto before = textrank_scores(mg.graph).scores;
  EXPECT_NEAR(before[0], before[3], 1e-12);
  EXPECT_NEAR(before[1], before[2], 1e-12);

  auto dense = to_dense(mg.graph);
  adjust_multipartite_weights(mg.graph, mg.candidates, mg.clustering, 1.1);
  // oil price first occurs at 0, gas at 3
  for (std::size_t j = 0; j < 4; ++j) {
    dense[j][0] *= 1.1 * std::exp(1.0);
    dense[j][1] *= 1.1 * std::exp(1.0 / 4.0);
  }
  EXPECT_EQ(to_dense(mg.graph), dense);
  const auto after = textrank_scores(mg.graph).scores;
  const auto oracle = testkit::dense_textrank(dense, 0.85, 500);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(after[i], oracle[i], 1e-9);
  EXPECT_GT(after[0], after[3]);

  const auto out = multipartite_extract(doc, 10);
  EXPECT_EQ(out.front().key, "oil price");
}

TEST(Multipartite, SingleTopicFallsBackToPositionOrder) {
  const auto out = multipartite_extract(testkit::toy_analyzer().analyze("oil price, oil, price oil"), 10);
  EXPECT_EQ(keys(out), (std::vector<std::string>{"oil price", "oil", "price oil"}));
  for (const auto& p : out) EXPECT_DOUBLE_EQ(p.score, 0.15);
}

TEST(Multipartite, LargeKReturnsEveryCandidate) {
  const auto doc = testkit::toy_analyzer().analyze("oil, gas, coal");
  EXPECT_EQ(multipartite_extract(doc, 100).size(), 3u);
  EXPECT_EQ(multipartite_extract(doc, 2).size(), 2u);
}

// --- shared extractor properties ----------------------------------------------

TEST(GraphExtractors, BoundedMonotoneAndDeterministic) {
  for (const auto& r : testkit::planted_corpus({.documents = 10, .seed = 37})) {
    const auto doc = Analyzer().analyze(r.body);
    for (std::size_t k : {0u, 3u, 10u}) {
      for (const auto& run : {singlerank_extract(doc, k), topicrank_extract(doc, k), multipartite_extract(doc, k)}) {
        EXPECT_LE(run.size(), k);
        for (std::size_t i = 1; i < run.size(); ++i) EXPECT_GE(run[i - 1].score, run[i].score);
      }
      EXPECT_EQ(keys(singlerank_extract(doc, k)), keys(singlerank_extract(doc, k)));
      EXPECT_EQ(keys(topicrank_extract(doc, k)), keys(topicrank_extract(doc, k)));
      EXPECT_EQ(keys(multipartite_extract(doc, k)), keys(multipartite_extract(doc, k)));
    }
  }
}
