#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kpe/eval.hpp"
#include "oracles.hpp"

using namespace kpe;

namespace {

using Keys = std::vector<std::string>;

// Returns canned predictions looked up by the document's source text, and
// throws for documents whose text is "boom".
class CannedExtractor final : public KeyphraseExtractor {
 public:
  CannedExtractor(std::string name, std::map<std::string, Keys> predictions)
      : name_(std::move(name)), predictions_(std::move(predictions)) {}

  std::string_view name() const override { return name_; }

  std::vector<ScoredPhrase> extract(const ProcessedDocument& doc, std::size_t k) const override {
    if (doc.source_text == "boom") throw std::runtime_error("exploded");
    std::vector<ScoredPhrase> out;
    const auto it = predictions_.find(doc.source_text);
    if (it == predictions_.end()) return out;
    for (const auto& key : it->second) {
      if (out.size() == k) break;
      out.push_back({key, key, 1.0 / static_cast<double>(out.size() + 1), out.size(), 1});
    }
    return out;
  }

 private:
  std::string name_;
  std::map<std::string, Keys> predictions_;
};

BenchDocument bench_doc(const std::string& id, Keys gold) {
  BenchDocument d;
  d.id = id;
  d.doc.source_text = id;
  d.gold = std::move(gold);
  return d;
}

Keys random_keys(std::mt19937_64& rng, std::size_t max_len) {
  Keys out;
  for (std::size_t i = 0, n = rng() % (max_len + 1); i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + rng() % 8)));
  return out;
}

}  // namespace

// --- matching -------------------------------------------------------------------

TEST(MatchSets, Basics) {
  EXPECT_EQ(match_sets({"a", "b", "c"}, {"c", "b", "a"}), 3u);
  EXPECT_EQ(match_sets({"a", "b"}, {"x", "y"}), 0u);
  EXPECT_EQ(match_sets({}, {"x"}), 0u);
}

TEST(MatchSets, EachKeyMatchesAtMostOnce) {
  EXPECT_EQ(match_sets({"a", "a", "a"}, {"a"}), 1u);
  EXPECT_EQ(match_sets({"a"}, {"a", "a"}), 1u);
  EXPECT_EQ(match_sets({"a", "a", "b"}, {"a", "a", "c"}), 2u);
}

TEST(MatchSets, InflectedVariantMatchesOnStems) {
  const Analyzer analyzer;
  const auto gold = phrase_match_key(analyzer, "بازار نفت", false);
  EXPECT_EQ(phrase_match_key(analyzer, "بازارهای نفت", false), gold);
  EXPECT_NE(phrase_match_key(analyzer, "بازارهای نفت", true), phrase_match_key(analyzer, "بازار نفت", true));
  EXPECT_EQ(phrase_match_key(analyzer, " ، ", false), "،");
  EXPECT_EQ(phrase_match_key(analyzer, "   ", false), "");
}

TEST(MatchSets, PredictionKeyFollowsMode) {
  const ScoredPhrase p{"بازارهای نفت", "بازار نفت", 1.0, 0, 2};
  EXPECT_EQ(prediction_key(p, false), "بازار نفت");
  EXPECT_EQ(prediction_key(p, true), "بازارهای نفت");
}

// --- precision, recall, F1 ------------------------------------------------------

TEST(PrfAtK, WorkedExample) {
  const auto s = prf_at_k({"a", "b", "c", "d", "e"}, {"a", "b", "x"}, 5);
  EXPECT_EQ(s.matched, 2u);
  EXPECT_DOUBLE_EQ(s.precision, 0.4);
  EXPECT_DOUBLE_EQ(s.recall, 2.0 / 3.0);
  EXPECT_NEAR(s.f1, 0.5, 1e-15);
}

TEST(PrfAtK, PerfectAndEmpty) {
  const auto perfect = prf_at_k({"a", "b", "c", "d", "e", "f"}, {"e", "d", "c", "b", "a"}, 5);
  EXPECT_DOUBLE_EQ(perfect.precision, 1.0);
  EXPECT_DOUBLE_EQ(perfect.recall, 1.0);
  EXPECT_DOUBLE_EQ(perfect.f1, 1.0);
  const auto none = prf_at_k({"x", "y"}, {"a"}, 5);
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.recall, 0.0);
  EXPECT_EQ(none.f1, 0.0);
  const auto empty = prf_at_k({}, {"a"}, 5);
  EXPECT_EQ(empty.precision, 0.0);
  EXPECT_EQ(empty.f1, 0.0);
}

TEST(PrfAtK, ShortListDenominator) {
  const auto lenient = prf_at_k({"a", "b"}, {"a", "c"}, 5);
  EXPECT_DOUBLE_EQ(lenient.precision, 0.5);
  const auto strict = prf_at_k({"a", "b"}, {"a", "c"}, 5, true);
  EXPECT_DOUBLE_EQ(strict.precision, 0.2);
  EXPECT_DOUBLE_EQ(strict.recall, lenient.recall);
}

TEST(PrfAtK, RejectsInvalidArguments) {
  EXPECT_THROW(prf_at_k({"a"}, {"a"}, 0), std::invalid_argument);
  EXPECT_THROW(prf_at_k({"a"}, {}, 5), std::invalid_argument);
}

TEST(PrfAtK, MatchesBruteForceOnRandomCases) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000; ++i) {
    const auto predicted = random_keys(rng, 14);
    Keys gold = random_keys(rng, 8);
    if (gold.empty()) gold.push_back("a");
    const std::size_t k = 1 + rng() % 12;
    const bool strict = rng() % 2;
    const auto got = prf_at_k(predicted, gold, k, strict);
    const auto want = testkit::brute_force_prf(predicted, gold, k, strict);
    EXPECT_EQ(got.matched, want.matched);
    EXPECT_EQ(got.precision, want.precision);
    EXPECT_EQ(got.recall, want.recall);
    EXPECT_EQ(got.f1, want.f1);
    EXPECT_GE(got.precision, 0.0);
    EXPECT_LE(got.precision, 1.0);
    EXPECT_LE(got.recall, 1.0);
    EXPECT_LE(got.f1, 1.0);
  }
}

TEST(PrfAtK, RecallGrowsWithK) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 1000; ++i) {
    const auto predicted = random_keys(rng, 14);
    Keys gold = random_keys(rng, 8);
    if (gold.empty()) gold.push_back("b");
    const auto at5 = prf_at_k(predicted, gold, 5);
    const auto at10 = prf_at_k(predicted, gold, 10);
    EXPECT_GE(at10.matched, at5.matched);
    EXPECT_GE(at10.recall, at5.recall);
  }
}

// --- benchmark ------------------------------------------------------------------

TEST(Benchmark, PerfectSingleDocument) {
  const CannedExtractor m("tfidf", {{"d1", {"a", "b", "c", "d", "e"}}});
  const auto report = run_benchmark({bench_doc("d1", {"a", "b", "c", "d", "e"})}, {&m}, {});
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].label, "TFIDF");
  EXPECT_EQ(report.document_count, 1u);
  EXPECT_DOUBLE_EQ(report.rows[0].at_k[0].precision, 1.0);
  EXPECT_DOUBLE_EQ(report.rows[0].at_k[0].recall, 1.0);
  EXPECT_DOUBLE_EQ(report.rows[0].at_k[0].f1, 1.0);
  // five predictions against k = 10
  EXPECT_DOUBLE_EQ(report.rows[0].at_k[1].precision, 1.0);
}

TEST(Benchmark, MacroAverage) {
  const CannedExtractor m("custom", {{"d1", {"a", "b"}}, {"d2", {"x", "y"}}});
  const auto report = run_benchmark({bench_doc("d1", {"a", "b"}), bench_doc("d2", {"a", "b"})}, {&m}, {});
  EXPECT_EQ(report.rows[0].label, "custom");
  for (const auto& s : report.rows[0].at_k) {
    EXPECT_DOUBLE_EQ(s.precision, 0.5);
    EXPECT_DOUBLE_EQ(s.recall, 0.5);
    EXPECT_DOUBLE_EQ(s.f1, 0.5);
  }
}

TEST(Benchmark, MinGoldFiltersDocuments) {
  const CannedExtractor m("yake", {});
  const std::vector<BenchDocument> docs{bench_doc("two", {"a", "b"}), bench_doc("three", {"a", "b", "c"}),
                                        bench_doc("none", {})};
  BenchmarkConfig config;
  config.min_gold = 2;
  const auto all = run_benchmark(docs, {&m}, config);
  config.min_gold = 3;
  const auto three = run_benchmark(docs, {&m}, config);
  EXPECT_EQ(all.document_count, 2u);
  EXPECT_EQ(three.document_count, 1u);
  EXPECT_EQ(three.excluded_count, 2u);
  ASSERT_EQ(all.diagnostics.size(), 1u);
  EXPECT_NE(all.diagnostics[0].find("none"), std::string::npos);
}

TEST(Benchmark, FailingMethodScoresZeroAndIsReported) {
  const CannedExtractor good("kea", {{"ok", {"a"}}, {"boom", {"a"}}});
  const CannedExtractor same("kpminer", {{"ok", {"a"}}});
  const std::vector<BenchDocument> docs{bench_doc("ok", {"a"}), bench_doc("boom", {"a"})};
  BenchmarkConfig config;
  config.min_gold = 1;
  const auto report = run_benchmark(docs, {&good, &same}, config);
  EXPECT_TRUE(report.any_failures());
  EXPECT_EQ(report.rows[0].failures, 1u);
  EXPECT_DOUBLE_EQ(report.rows[0].at_k[0].recall, 0.5);
  EXPECT_EQ(report.rows[1].failures, 1u);
  ASSERT_EQ(report.diagnostics.size(), 2u);
  EXPECT_NE(report.diagnostics[0].find("exploded"), std::string::npos);
  EXPECT_NE(render_report_text(report).find("(1 failures)"), std::string::npos);
}

TEST(Benchmark, InvariantToDocumentOrderAndJobs) {
  std::mt19937_64 rng(107);
  std::map<std::string, Keys> predictions;
  std::vector<BenchDocument> docs;
  for (int i = 0; i < 200; ++i) {
    const std::string id = "d" + std::to_string(i);
    predictions[id] = random_keys(rng, 12);
    Keys gold = random_keys(rng, 6);
    docs.push_back(bench_doc(id, gold));
  }
  const CannedExtractor m("singlerank", predictions);
  BenchmarkConfig config;
  config.min_gold = 1;
  const auto base = run_benchmark(docs, {&m}, config);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(docs.begin(), docs.end(), rng);
    config.jobs = 1 + trial % 4;
    const auto other = run_benchmark(docs, {&m}, config);
    ASSERT_EQ(other.document_count, base.document_count);
    for (std::size_t i = 0; i < base.ks.size(); ++i) {
      EXPECT_EQ(other.rows[0].at_k[i].precision, base.rows[0].at_k[i].precision);
      EXPECT_EQ(other.rows[0].at_k[i].recall, base.rows[0].at_k[i].recall);
      EXPECT_EQ(other.rows[0].at_k[i].f1, base.rows[0].at_k[i].f1);
    }
  }
}

TEST(Benchmark, ConfigValidation) {
  const CannedExtractor m("tfidf", {});
  BenchmarkConfig config;
  config.ks = {};
  EXPECT_THROW(run_benchmark({}, {&m}, config), std::invalid_argument);
  config.ks = {5, 0};
  EXPECT_THROW(run_benchmark({}, {&m}, config), std::invalid_argument);
  config.ks = {5};
  config.jobs = 0;
  EXPECT_THROW(run_benchmark({}, {&m}, config), std::invalid_argument);
}

TEST(Benchmark, PrepareDocumentsDropsEmptyGold) {
  const std::vector<NewsRecord> records{{"t", "بازار نفت امروز", "", {"بازارهای نفت", "  "}, "c", "u1"}};
  const auto docs = prepare_documents(records, Analyzer(), false, 2);
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].id, "u1");
  EXPECT_EQ(docs[0].gold, (Keys{"بازار نفت"}));
  EXPECT_EQ(docs[0].doc.word_count(), 3u);
}

TEST(MetricAccumulator, MergeEqualsSequentialAdds) {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> u(0, 1);
  MetricAccumulator all(2);
  MetricAccumulator left(2);
  MetricAccumulator right(2);
  for (int i = 0; i < 100; ++i) {
    const std::vector<PrfScore> s{{u(rng), u(rng), u(rng), 0}, {u(rng), u(rng), u(rng), 0}};
    all.add(s);
    (i % 3 ? left : right).add(s);
  }
  right.merge(left);
  EXPECT_EQ(right.count(), 100u);
  const auto a = all.averages();
  const auto b = right.averages();
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(a[i].precision, b[i].precision);
    EXPECT_EQ(a[i].recall, b[i].recall);
    EXPECT_EQ(a[i].f1, b[i].f1);
  }
  EXPECT_THROW(all.add({PrfScore{}}), std::invalid_argument);
}

// --- rendering ------------------------------------------------------------------

TEST(Report, TextLayout) {
  const CannedExtractor m("multipartiterank", {{"d1", {"a", "x"}}});
  const auto report = run_benchmark({bench_doc("d1", {"a", "b"})}, {&m}, {});
  const auto text = render_report_text(report);
  EXPECT_EQ(text,
            "Benchmark on documents with at least 2 gold keyphrases (1 documents, 0 excluded)\n"
            "Method  P@5     R@5     F1@5    P@10    R@10    F1@10\n"
            "M.Rank  .5000   .5000   .5000   .5000   .5000   .5000\n");
}

TEST(Report, JsonKeepsFullPrecision) {
  const CannedExtractor m("topicrank", {{"d1", {"a", "x", "y"}}});
  const auto report = run_benchmark({bench_doc("d1", {"a", "b"})}, {&m}, {});
  const auto j = nlohmann::json::parse(render_report_json({report, report}));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["min_gold"], 2);
  EXPECT_EQ(j[0]["document_count"], 1);
  EXPECT_EQ(j[0]["methods"][0]["label"], "T.Rank");
  EXPECT_DOUBLE_EQ(j[0]["methods"][0]["P@5"].get<double>(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(j[0]["methods"][0]["F1@10"].get<double>(), 0.4);
}
