#include "kpe/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "kpe/parallel.hpp"

namespace kpe {

std::size_t match_sets(const std::vector<std::string>& predicted, const std::vector<std::string>& gold) {
  std::map<std::string_view, std::size_t> remaining;
  for (const auto& g : gold) ++remaining[g];
  std::size_t matched = 0;
  for (const auto& p : predicted) {
    auto it = remaining.find(p);
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      ++matched;
    }
  }
  return matched;
}

PrfScore prf_at_k(const std::vector<std::string>& predicted, const std::vector<std::string>& gold,
                  std::size_t k, bool strict_at_k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (gold.empty()) throw std::invalid_argument("gold keyphrase list is empty");
  const std::size_t shown = std::min(k, predicted.size());
  const std::vector<std::string> top(predicted.begin(), predicted.begin() + static_cast<std::ptrdiff_t>(shown));
  PrfScore s;
  s.matched = match_sets(top, gold);
  const std::size_t denom = strict_at_k ? k : shown;
  s.precision = denom == 0 ? 0.0 : static_cast<double>(s.matched) / static_cast<double>(denom);
  s.recall = static_cast<double>(s.matched) / static_cast<double>(gold.size());
  s.f1 = s.precision + s.recall > 0.0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
  return s;
}

std::string phrase_match_key(const Analyzer& analyzer, std::string_view phrase, bool exact) {
  return join(exact ? analyzer.phrase_surfaces(phrase) : analyzer.phrase_stems(phrase));
}

std::string prediction_key(const ScoredPhrase& phrase, bool exact) { return exact ? phrase.text : phrase.key; }

std::vector<BenchDocument> prepare_documents(const std::vector<NewsRecord>& records,
                                             const Analyzer& analyzer, bool exact_match,
                                             std::size_t jobs) {
  std::vector<BenchDocument> docs(records.size());
  parallel_for(records.size(), jobs, [&](std::size_t i) {
    auto& d = docs[i];
    d.id = records[i].url;
    d.doc = analyzer.analyze(records[i].body);
    for (const auto& kp : records[i].keyphrases) {
      auto key = phrase_match_key(analyzer, kp, exact_match);
      if (!key.empty()) d.gold.push_back(std::move(key));
    }
  });
  return docs;
}

void BenchmarkConfig::validate() const {
  if (ks.empty()) throw std::invalid_argument("at least one k is required");
  for (auto k : ks) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
  }
  if (jobs == 0) throw std::invalid_argument("jobs must be at least 1");
}

// ---------------------------------------------------------------------------

void MetricAccumulator::add(const std::vector<PrfScore>& per_k) {
  if (per_k.size() * 3 != values_.size()) throw std::invalid_argument("metric count mismatch");
  for (std::size_t i = 0; i < per_k.size(); ++i) {
    values_[i * 3].push_back(per_k[i].precision);
    values_[i * 3 + 1].push_back(per_k[i].recall);
    values_[i * 3 + 2].push_back(per_k[i].f1);
  }
  ++count_;
}

void MetricAccumulator::merge(const MetricAccumulator& other) {
  if (other.values_.size() != values_.size()) throw std::invalid_argument("metric count mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i].insert(values_[i].end(), other.values_[i].begin(), other.values_[i].end());
  }
  count_ += other.count_;
}

std::vector<PrfScore> MetricAccumulator::averages() const {
  std::vector<PrfScore> out(values_.size() / 3);
  if (count_ == 0) return out;
  auto mean = [&](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(count_);
  };
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].precision = mean(values_[i * 3]);
    out[i].recall = mean(values_[i * 3 + 1]);
    out[i].f1 = mean(values_[i * 3 + 2]);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string EvalReport::subset() const {
  return "documents with at least " + std::to_string(min_gold) + " gold keyphrases";
}

bool EvalReport::any_failures() const {
  return std::any_of(rows.begin(), rows.end(), [](const MethodRow& r) { return r.failures > 0; });
}

EvalReport run_benchmark(const std::vector<BenchDocument>& documents,
                         const std::vector<const KeyphraseExtractor*>& methods,
                         const BenchmarkConfig& config) {
  config.validate();
  EvalReport report;
  report.ks = config.ks;
  report.min_gold = config.min_gold;
  report.strict_at_k = config.strict_at_k;
  report.exact_match = config.exact_match;

  std::vector<const BenchDocument*> eligible;
  for (const auto& d : documents) {
    if (d.gold.empty()) {
      report.diagnostics.push_back("excluded " + d.id + ": no gold keyphrases");
      ++report.excluded_count;
    } else if (d.gold.size() < config.min_gold) {
      ++report.excluded_count;
    } else {
      eligible.push_back(&d);
    }
  }
  report.document_count = eligible.size();

  const std::size_t max_k = *std::max_element(config.ks.begin(), config.ks.end());
  struct Cell {
    std::vector<PrfScore> per_k;
    std::string error;
  };
  std::vector<std::vector<Cell>> cells(eligible.size(), std::vector<Cell>(methods.size()));
  parallel_for(eligible.size(), config.jobs, [&](std::size_t i) {
    const auto& d = *eligible[i];
    for (std::size_t m = 0; m < methods.size(); ++m) {
      auto& cell = cells[i][m];
      try {
        std::vector<std::string> keys;
        for (const auto& p : methods[m]->extract(d.doc, max_k)) {
          keys.push_back(prediction_key(p, config.exact_match));
        }
        for (auto k : config.ks) cell.per_k.push_back(prf_at_k(keys, d.gold, k, config.strict_at_k));
      } catch (const std::exception& e) {
        cell.per_k.assign(config.ks.size(), PrfScore{});
        cell.error = e.what();
      }
    }
  });

  for (std::size_t m = 0; m < methods.size(); ++m) {
    MethodRow row;
    row.method = std::string(methods[m]->name());
    try {
      row.label = std::string(method_label(row.method));
    } catch (const UnknownMethodError&) {
      row.label = row.method;
    }
    MetricAccumulator acc(config.ks.size());
    for (std::size_t i = 0; i < eligible.size(); ++i) {
      acc.add(cells[i][m].per_k);
      if (!cells[i][m].error.empty()) {
        ++row.failures;
        report.diagnostics.push_back(row.method + " failed on " + eligible[i]->id + ": " +
                                     cells[i][m].error);
      }
    }
    row.at_k = acc.averages();
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s.rfind("0.", 0) == 0) s.erase(0, 1);
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string render_report_text(const EvalReport& r) {
  std::ostringstream out;
  out << "Benchmark on " << r.subset() << " (" << r.document_count << " documents, "
      << r.excluded_count << " excluded)\n";
  out << pad("Method", 8);
  for (auto k : r.ks) {
    for (const char* m : {"P", "R", "F1"}) out << pad(std::string(m) + "@" + std::to_string(k), 8);
  }
  out << '\n';
  for (const auto& row : r.rows) {
    out << pad(row.label, 8);
    for (const auto& s : row.at_k) out << pad(fixed4(s.precision), 8) << pad(fixed4(s.recall), 8) << pad(fixed4(s.f1), 8);
    if (row.failures) out << "(" << row.failures << " failures)";
    out << '\n';
  }
  std::string text = out.str();
  // drop trailing padding on each line
  std::string trimmed;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + '\n';
  }
  return trimmed;
}

std::string render_report_json(const std::vector<EvalReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["subset"] = r.subset();
    j["min_gold"] = r.min_gold;
    j["document_count"] = r.document_count;
    j["excluded_count"] = r.excluded_count;
    j["strict_at_k"] = r.strict_at_k;
    j["exact_match"] = r.exact_match;
    j["ks"] = r.ks;
    j["methods"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
      nlohmann::ordered_json m;
      m["method"] = row.method;
      m["label"] = row.label;
      m["failures"] = row.failures;
      for (std::size_t i = 0; i < r.ks.size(); ++i) {
        const auto k = std::to_string(r.ks[i]);
        m["P@" + k] = row.at_k[i].precision;
        m["R@" + k] = row.at_k[i].recall;
        m["F1@" + k] = row.at_k[i].f1;
      }
      j["methods"].push_back(std::move(m));
    }
    j["diagnostics"] = r.diagnostics;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace kpe
