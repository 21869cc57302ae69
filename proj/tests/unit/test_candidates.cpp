#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "kpe/candidates.hpp"
#include "kpe/ranking.hpp"
#include "toy_analyzer.hpp"

using namespace kpe;

namespace {

std::vector<std::string> keys(const CandidateSet& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.key());
  return out;
}

const Candidate* find(const CandidateSet& cs, const std::string& key) {
  for (const auto& c : cs) {
    if (c.key() == key) return &c;
  }
  return nullptr;
}

std::vector<std::size_t> positions(const Candidate& c) {
  std::vector<std::size_t> out;
  for (const auto& o : c.occurrences) out.push_back(o.position);
  return out;
}

}  // namespace

TEST(NgramCandidates, SpansSkipStopwordEdgesAndPunctuation) {
  const auto doc = testkit::toy_analyzer().analyze("the big market of red oil. oil market prices rise.");
  const auto cs = ngram_candidates(doc, 3);
  EXPECT_EQ(keys(cs), (std::vector<std::string>{
                          "big", "big market", "market", "market of red", "red", "red oil", "oil",
                          "oil market", "oil market prices", "market prices", "market prices rise",
                          "prices", "prices rise", "rise"}));
  ASSERT_NE(find(cs, "market"), nullptr);
  EXPECT_EQ(positions(*find(cs, "market")), (std::vector<std::size_t>{2, 8}));
  EXPECT_EQ(positions(*find(cs, "oil")), (std::vector<std::size_t>{5, 7}));
  EXPECT_EQ(find(cs, "oil market prices")->length_tokens, 3u);
}

TEST(NgramCandidates, MaxNBoundsLength) {
  const auto doc = testkit::toy_analyzer().analyze("alpha beta gamma delta");
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto cs = ngram_candidates(doc, n);
    const std::size_t m = std::min<std::size_t>(n, 4);
    // spans of length l over 4 tokens: 4 - l + 1
    std::size_t expected = 0;
    for (std::size_t l = 1; l <= m; ++l) expected += 4 - l + 1;
    EXPECT_EQ(cs.size(), expected) << "n=" << n;
    for (const auto& c : cs) EXPECT_LE(c.length_tokens, n);
  }
}

TEST(NgramCandidates, DoNotCrossSentences) {
  const auto doc = testkit::toy_analyzer().analyze("alpha beta\ngamma");
  EXPECT_EQ(find(ngram_candidates(doc, 3), "beta gamma"), nullptr);
}

TEST(NgramCandidates, SurfaceComesFromFirstOccurrence) {
  const auto doc = testkit::toy_analyzer().analyze("Oil rises. oil falls.");
  const auto cs = ngram_candidates(doc, 1);
  const auto* c = find(cs, "oil");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->surface(), "Oil");
  EXPECT_EQ(c->frequency(), 2u);
}

TEST(NgramCandidates, EmptyDocumentHasNone) {
  EXPECT_TRUE(ngram_candidates(testkit::toy_analyzer().analyze(""), 3).empty());
  EXPECT_TRUE(ngram_candidates(testkit::toy_analyzer().analyze("the of and ."), 3).empty());
}

TEST(PosCandidates, NounsFollowedByAdjectives) {
  const auto doc = testkit::toy_analyzer().analyze("oil market big red runs on prices new. big oil");
  EXPECT_EQ(keys(pos_sequence_candidates(doc)),
            (std::vector<std::string>{"oil market big red", "prices new", "oil"}));
}

TEST(PosCandidates, AdjectiveAloneIsNotACandidate) {
  const auto doc = testkit::toy_analyzer().analyze("big red. new");
  EXPECT_TRUE(pos_sequence_candidates(doc).empty());
}

TEST(KpMinerCandidates, LasfCutoffAndMaxLength) {
  const auto doc = testkit::toy_analyzer().analyze(
      "alpha beta gamma. alpha beta. alpha beta gamma. the alpha.");
  EXPECT_EQ(keys(kpminer_candidates(doc, 3, 250)),
            (std::vector<std::string>{"alpha", "alpha beta", "beta"}));
  EXPECT_EQ(keys(kpminer_candidates(doc, 2, 250)),
            (std::vector<std::string>{"alpha", "alpha beta", "alpha beta gamma", "beta",
                                      "beta gamma", "gamma"}));
  EXPECT_EQ(keys(kpminer_candidates(doc, 2, 1)),
            (std::vector<std::string>{"alpha", "alpha beta", "alpha beta gamma"}));
  EXPECT_EQ(keys(kpminer_candidates(doc, 2, 1, 2)), (std::vector<std::string>{"alpha", "alpha beta"}));
  EXPECT_EQ(positions(*find(kpminer_candidates(doc, 1, 250), "alpha")),
            (std::vector<std::size_t>{0, 4, 7, 12}));
}

TEST(KpMinerCandidates, StopwordsSplitMaximalSpans) {
  const auto doc = testkit::toy_analyzer().analyze("alpha of beta alpha of beta");
  const auto cs = kpminer_candidates(doc, 1, 250);
  EXPECT_EQ(find(cs, "alpha of beta"), nullptr);
  EXPECT_NE(find(cs, "beta alpha"), nullptr);
}

TEST(MergeSpans, MergesEqualStemsAndOrdersByFirstPosition) {
  const auto doc = testkit::toy_analyzer().analyze("delta alpha beta alpha beta");
  const auto tokens = doc.flat();
  const std::vector<Span> spans{{3, 5}, {1, 3}, {3, 4}, {1, 2}, {0, 1}, {1, 2}};
  const auto cs = merge_spans(tokens, spans);
  EXPECT_EQ(keys(cs), (std::vector<std::string>{"delta", "alpha", "alpha beta"}));
  EXPECT_EQ(positions(cs[1]), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(positions(cs[2]), (std::vector<std::size_t>{1, 3}));
}

TEST(MergeSpans, OccurrencesSortedAndUnique) {
  std::mt19937_64 rng(5);
  const auto doc = testkit::toy_analyzer().analyze("a1 b2 a1 b2 a1 c3 a1 b2 c3 a1");
  const auto tokens = doc.flat();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Span> spans;
    std::uniform_int_distribution<std::size_t> start(0, tokens.size() - 1);
    for (int i = 0; i < 15; ++i) {
      const std::size_t b = start(rng);
      const std::size_t e = std::min(tokens.size(), b + 1 + rng() % 3);
      spans.push_back({b, e});
    }
    const auto cs = merge_spans(tokens, spans);
    std::vector<std::string> seen;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto p = positions(cs[i]);
      EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
      EXPECT_EQ(std::adjacent_find(p.begin(), p.end()), p.end());
      EXPECT_EQ(std::count(seen.begin(), seen.end(), cs[i].key()), 0);
      seen.push_back(cs[i].key());
      if (i > 0) {
        EXPECT_TRUE(cs[i - 1].first_position() < cs[i].first_position() ||
                    (cs[i - 1].first_position() == cs[i].first_position() &&
                     cs[i - 1].length_tokens <= cs[i].length_tokens));
      }
    }
  }
}

TEST(IsSubphrase, ContiguousOnly) {
  const std::vector<std::string> abc{"a", "b", "c"};
  EXPECT_TRUE(is_subphrase({"a", "b"}, abc));
  EXPECT_TRUE(is_subphrase({"b", "c"}, abc));
  EXPECT_TRUE(is_subphrase(abc, abc));
  EXPECT_FALSE(is_subphrase({"a", "c"}, abc));
  EXPECT_FALSE(is_subphrase({}, abc));
  EXPECT_FALSE(is_subphrase({"a", "b", "c", "d"}, abc));
}

TEST(Ranking, TieBreaksByPositionLengthThenKey) {
  std::vector<ScoredPhrase> v{
      {"x", "x", 1.0, 5, 1}, {"y", "y", 2.0, 9, 1}, {"z", "z", 1.0, 3, 2},
      {"w", "w", 1.0, 3, 1}, {"v", "v", 1.0, 3, 1},
  };
  rank(v);
  std::vector<std::string> order;
  for (const auto& p : v) order.push_back(p.key);
  EXPECT_EQ(order, (std::vector<std::string>{"y", "v", "w", "z", "x"}));

  rank(v, Order::Ascending);
  order.clear();
  for (const auto& p : v) order.push_back(p.key);
  EXPECT_EQ(order, (std::vector<std::string>{"v", "w", "z", "x", "y"}));
}

TEST(Ranking, TopKIsAPrefixOfTheFullRanking) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ScoredPhrase> v;
    for (int i = 0; i < 20; ++i) {
      const std::string key = "k" + std::to_string(i);
      v.push_back({key, key, static_cast<double>(rng() % 4), rng() % 6, 1 + rng() % 3});
    }
    auto full = v;
    rank(full);
    std::shuffle(v.begin(), v.end(), rng);
    const std::size_t k = rng() % 25;
    const auto top = top_k(v, k);
    ASSERT_EQ(top.size(), std::min<std::size_t>(k, 20));
    for (std::size_t i = 0; i < top.size(); ++i) EXPECT_EQ(top[i].key, full[i].key);
  }
}
