#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "kpe/stat_models.hpp"
#include "kpe/utf8.hpp"

namespace kpe {

void YakeConfig::validate() const {
  if (window < 1) throw std::invalid_argument("YAKE window must be >= 1");
  if (max_ngram < 1) throw std::invalid_argument("YAKE max_ngram must be >= 1");
  if (!(dedup_threshold > 0.0 && dedup_threshold <= 1.0)) {
    throw std::invalid_argument("YAKE dedup_threshold must be in (0, 1]");
  }
}

double yake_term_score(double casing, double position, double frequency, double relatedness,
                       double dif_sentence) {
  return (relatedness * position) /
         (casing + frequency / relatedness + dif_sentence / relatedness);
}

double yake_phrase_score(std::span<const double> term_scores, std::size_t phrase_tf) {
  double product = 1.0;
  double sum = 0.0;
  for (double s : term_scores) {
    product *= s;
    sum += s;
  }
  return product / (static_cast<double>(phrase_tf) * (1.0 + sum));
}

namespace {

bool upper_marked(const Token& t, bool sentence_initial) {
  const auto& s = t.surface;
  if (s.empty()) return false;
  bool all_digits = true;
  bool all_upper = true;
  for (char c : s) {
    all_digits = all_digits && c >= '0' && c <= '9';
    all_upper = all_upper && c >= 'A' && c <= 'Z';
  }
  if (all_digits) return true;
  if (all_upper && s.size() > 1) return true;
  return !sentence_initial && s.front() >= 'A' && s.front() <= 'Z';
}

struct TermStats {
  std::size_t tf = 0;
  std::size_t marked = 0;
  std::set<std::size_t> sentences;
  std::map<std::string, std::size_t> left;   // neighbor stem -> co-occurrences
  std::map<std::string, std::size_t> right;
  bool stopword = false;
};

double median(const std::set<std::size_t>& values) {
  std::vector<double> v(values.begin(), values.end());
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

double spread(const std::map<std::string, std::size_t>& neighbors) {
  std::size_t total = 0;
  for (const auto& [_, n] : neighbors) total += n;
  return total ? static_cast<double>(neighbors.size()) / static_cast<double>(total) : 0.0;
}

}  // namespace

std::unordered_map<std::string, YakeTermFeatures> yake_term_features(const ProcessedDocument& doc,
                                                                     const YakeConfig& config) {
  std::unordered_map<std::string, TermStats> stats;
  for (const auto& sentence : doc.sentences) {
    // blocks are punctuation-free runs inside a sentence
    std::vector<const Token*> block;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const Token& t = sentence[i];
      if (t.pos == PosTag::Punct) {
        block.clear();
        continue;
      }
      auto& ts = stats[t.stem];
      ++ts.tf;
      ts.marked += upper_marked(t, i == 0);
      ts.sentences.insert(t.sentence_index);
      ts.stopword = ts.stopword || t.is_stopword;
      const std::size_t from = block.size() > config.window ? block.size() - config.window : 0;
      for (std::size_t j = from; j < block.size(); ++j) {
        ++ts.left[block[j]->stem];
        ++stats[block[j]->stem].right[t.stem];
      }
      block.push_back(&t);
    }
  }

  std::unordered_map<std::string, YakeTermFeatures> features;
  if (stats.empty()) return features;

  std::vector<double> valid_tf;
  std::size_t max_tf = 0;
  for (const auto& [_, ts] : stats) {
    max_tf = std::max(max_tf, ts.tf);
    if (!ts.stopword) valid_tf.push_back(static_cast<double>(ts.tf));
  }
  double mean = 0.0;
  double sd = 0.0;
  if (!valid_tf.empty()) {
    for (double v : valid_tf) mean += v;
    mean /= static_cast<double>(valid_tf.size());
    for (double v : valid_tf) sd += (v - mean) * (v - mean);
    sd = std::sqrt(sd / static_cast<double>(valid_tf.size()));
  }
  const double norm = mean + sd > 0 ? mean + sd : 1.0;
  const double sentence_count = static_cast<double>(std::max<std::size_t>(doc.sentences.size(), 1));

  for (const auto& [stem, ts] : stats) {
    YakeTermFeatures f;
    f.tf = ts.tf;
    f.stopword = ts.stopword;
    const double tf = static_cast<double>(ts.tf);
    f.casing = 1.0 + static_cast<double>(ts.marked) / (1.0 + tf);
    f.position = std::log(std::log(3.0 + median(ts.sentences)));
    f.frequency = tf / norm;
    f.relatedness = 1.0 + (spread(ts.left) + spread(ts.right)) * tf / static_cast<double>(max_tf);
    f.dif_sentence = static_cast<double>(ts.sentences.size()) / sentence_count;
    f.score = yake_term_score(f.casing, f.position, f.frequency, f.relatedness, f.dif_sentence);
    features.emplace(stem, f);
  }
  return features;
}

std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double levenshtein_similarity(std::string_view a, std::string_view b) {
  const auto ua = utf8::decode(a);
  const auto ub = utf8::decode(b);
  const std::size_t longest = std::max(ua.size(), ub.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein_distance(ua, ub)) / static_cast<double>(longest);
}

std::vector<ScoredPhrase> dedup_levenshtein(const std::vector<ScoredPhrase>& ranked,
                                            double threshold, std::size_t k) {
  std::vector<ScoredPhrase> kept;
  for (const auto& p : ranked) {
    if (kept.size() >= k) break;
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const ScoredPhrase& q) {
      return levenshtein_similarity(p.text, q.text) >= threshold;
    });
    if (!duplicate) kept.push_back(p);
  }
  return kept;
}

std::vector<ScoredPhrase> yake_extract(const ProcessedDocument& doc, const YakeConfig& config,
                                       std::size_t k) {
  config.validate();
  const auto features = yake_term_features(doc, config);
  std::vector<ScoredPhrase> scored;
  std::vector<double> term_scores;
  for (const auto& c : ngram_candidates(doc, config.max_ngram)) {
    term_scores.clear();
    // Inner stopwords do not contribute to the phrase score.
    for (const auto& s : c.stems) {
      const auto& f = features.at(s);
      if (!f.stopword) term_scores.push_back(f.score);
    }
    scored.push_back(make_scored(c, yake_phrase_score(term_scores, c.frequency())));
  }
  rank(scored, Order::Ascending);
  return dedup_levenshtein(scored, config.dedup_threshold, k);
}

}  // namespace kpe
