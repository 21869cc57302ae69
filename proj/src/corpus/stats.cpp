#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "kpe/corpus.hpp"
#include "json.hpp"

namespace kpe {

// --- presence ---------------------------------------------------------------

bool contains_sequence(std::span<const std::string> haystack, std::span<const std::string> needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

std::vector<KeyphrasePresence> keyphrase_presence(const NewsRecord& record,
                                                  const Analyzer& analyzer) {
  const auto body = analyzer.phrase_stems(record.body);
  std::vector<KeyphrasePresence> out;
  out.reserve(record.keyphrases.size());
  for (const auto& kp : record.keyphrases) {
    const auto stems = analyzer.phrase_stems(kp);
    out.push_back({kp, contains_sequence(body, stems)});
  }
  return out;
}

// --- histogram --------------------------------------------------------------

Histogram Histogram::from_edges(std::vector<std::size_t> edges, bool close_last) {
  Histogram h;
  h.edges_ = std::move(edges);
  h.counts_.assign(h.edges_.size() > 1 ? h.edges_.size() - 1 : 0, 0);
  h.close_last_ = close_last;
  return h;
}

Histogram Histogram::from_values(std::size_t lo, std::size_t hi, bool overflow_label_plus) {
  Histogram h;
  for (std::size_t v = lo; v <= hi; ++v) h.edges_.push_back(v);
  h.counts_.assign(h.edges_.size(), 0);
  h.discrete_ = true;
  h.plus_label_ = overflow_label_plus;
  return h;
}

void Histogram::add(std::size_t value, std::size_t times) {
  if (edges_.empty()) {
    overflow_ += times;
    return;
  }
  if (value < edges_.front()) {
    underflow_ += times;
    return;
  }
  if (discrete_) {
    if (value > edges_.back()) {
      overflow_ += times;
    } else {
      counts_[value - edges_.front()] += times;
    }
    return;
  }
  const std::size_t last = edges_.back();
  if (value > last || (value == last && !close_last_)) {
    overflow_ += times;
    return;
  }
  // first edge strictly greater than value closes the bucket
  auto it = std::upper_bound(edges_.begin(), edges_.end(), value);
  std::size_t idx = static_cast<std::size_t>(it - edges_.begin());
  idx = idx == 0 ? 0 : idx - 1;
  if (idx >= counts_.size()) idx = counts_.size() - 1;  // value == last, closed
  counts_[idx] += times;
}

void Histogram::merge(const Histogram& other) {
  for (std::size_t i = 0; i < counts_.size() && i < other.counts_.size(); ++i) {
    counts_[i] += other.counts_[i];
  }
  underflow_ += other.underflow_;
  overflow_ += other.overflow_;
}

std::vector<HistogramBucket> Histogram::buckets() const {
  std::vector<HistogramBucket> out;
  if (underflow_ && !edges_.empty()) {
    out.push_back({"<" + std::to_string(edges_.front()), underflow_});
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    std::string label = discrete_ ? std::to_string(edges_[i])
                                  : std::to_string(edges_[i]) + "-" + std::to_string(edges_[i + 1]);
    out.push_back({std::move(label), counts_[i]});
  }
  if (overflow_) {
    const std::string top = edges_.empty() ? "0" : std::to_string(edges_.back());
    out.push_back({plus_label_ ? top + "+" : ">" + top, overflow_});
  }
  return out;
}

std::size_t Histogram::total() const {
  std::size_t t = underflow_ + overflow_;
  for (auto c : counts_) t += c;
  return t;
}

// --- stats ------------------------------------------------------------------

CorpusStats::CorpusStats()
    : body_token_histogram(Histogram::from_edges(
          {40, 100, 150, 200, 250, 300, 350, 400, 450, 500}, true)),
      keyphrase_count_histogram(Histogram::from_values(2, 9, true)),
      keyphrase_char_histogram(Histogram::from_edges({3, 5, 10, 15, 20, 25, 30, 35, 40}, true)),
      keyphrase_token_histogram(Histogram::from_values(1, 7, false)) {}

std::string source_of(std::string_view url) {
  if (auto scheme = url.find("://"); scheme != std::string_view::npos) url.remove_prefix(scheme + 3);
  const auto end = url.find_first_of("/?#");
  std::string_view host = url.substr(0, end);
  if (auto at = host.rfind('@'); at != std::string_view::npos) host.remove_prefix(at + 1);
  if (auto colon = host.find(':'); colon != std::string_view::npos) host = host.substr(0, colon);
  std::string out(host);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  if (out.rfind("www.", 0) == 0) out.erase(0, 4);
  return out.empty() ? "unknown" : out;
}

CorpusStats compute_stats(const std::vector<NewsRecord>& records, const Analyzer& analyzer) {
  CorpusStats stats;
  stats.record_count = records.size();
  for (const auto& r : records) {
    ++stats.per_source_counts[source_of(r.url)];
    stats.body_token_histogram.add(body_token_count(r.body));
    stats.keyphrase_count_histogram.add(r.keyphrases.size());
    stats.keyphrase_count += r.keyphrases.size();
    for (const auto& kp : r.keyphrases) {
      stats.keyphrase_char_histogram.add(keyphrase_char_count(kp));
      stats.keyphrase_token_histogram.add(keyphrase_token_count(kp));
    }
    for (const auto& p : keyphrase_presence(r, analyzer)) {
      (p.present ? stats.present_count : stats.absent_count) += 1;
    }
  }
  return stats;
}

double percent(std::size_t count, std::size_t total) {
  if (total == 0) return 0.0;
  return std::round(static_cast<double>(count) * 10000.0 / static_cast<double>(total)) / 100.0;
}

namespace {

struct Row {
  std::string label;
  std::size_t count;
};

std::vector<Row> source_rows(const CorpusStats& stats) {
  std::vector<Row> rows;
  for (const auto& [name, count] : stats.per_source_counts) rows.push_back({name, count});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.count > b.count; });
  return rows;
}

std::vector<Row> histogram_rows(const Histogram& h) {
  std::vector<Row> rows;
  for (const auto& b : h.buckets()) rows.push_back({b.label, b.count});
  return rows;
}

void render_table(std::ostringstream& out, const std::string& title, const std::string& key_header,
                  const std::string& count_header, const std::vector<Row>& rows,
                  std::size_t total) {
  out << title << '\n';
  out << std::left << std::setw(18) << key_header << std::right << std::setw(14) << count_header
      << std::setw(12) << "% of total" << '\n';
  for (const auto& r : rows) {
    std::ostringstream pct;
    pct << std::fixed << std::setprecision(2) << percent(r.count, total) << '%';
    out << std::left << std::setw(18) << r.label << std::right << std::setw(14) << r.count
        << std::setw(12) << pct.str() << '\n';
  }
  out << std::left << std::setw(18) << "total" << std::right << std::setw(14) << total
      << std::setw(12) << (total ? "100.00%" : "0.00%") << "\n\n";
}

nlohmann::ordered_json rows_json(const std::vector<Row>& rows, std::size_t total,
                                 const char* key_name) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row[key_name] = r.label;
    row["count"] = r.count;
    row["percent"] = percent(r.count, total);
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

std::string render_stats_text(const CorpusStats& stats) {
  std::ostringstream out;
  render_table(out, "Articles by website/agency", "website/agency", "# of articles",
               source_rows(stats), stats.record_count);
  render_table(out, "Articles by number of body tokens", "# of tokens", "# of articles",
               histogram_rows(stats.body_token_histogram), stats.record_count);
  render_table(out, "Articles by number of keyphrases", "# of keyphrases", "# of articles",
               histogram_rows(stats.keyphrase_count_histogram), stats.record_count);
  render_table(out, "Keyphrases by number of characters", "# of characters", "# of keyphrases",
               histogram_rows(stats.keyphrase_char_histogram), stats.keyphrase_count);
  render_table(out, "Keyphrases by number of tokens", "# of tokens", "# of keyphrases",
               histogram_rows(stats.keyphrase_token_histogram), stats.keyphrase_count);
  render_table(out, "Absent and present keyphrases", "", "# of keyphrases",
               {{"present", stats.present_count}, {"absent", stats.absent_count}},
               stats.keyphrase_count);
  return out.str();
}

std::string render_stats_json(const CorpusStats& stats) {
  nlohmann::ordered_json doc;
  doc["records"] = stats.record_count;
  doc["keyphrases"] = stats.keyphrase_count;
  doc["sources"] = rows_json(source_rows(stats), stats.record_count, "source");
  doc["body_tokens"] =
      rows_json(histogram_rows(stats.body_token_histogram), stats.record_count, "bucket");
  doc["keyphrase_counts"] =
      rows_json(histogram_rows(stats.keyphrase_count_histogram), stats.record_count, "bucket");
  doc["keyphrase_chars"] =
      rows_json(histogram_rows(stats.keyphrase_char_histogram), stats.keyphrase_count, "bucket");
  doc["keyphrase_tokens"] =
      rows_json(histogram_rows(stats.keyphrase_token_histogram), stats.keyphrase_count, "bucket");
  doc["presence"] = rows_json({{"present", stats.present_count}, {"absent", stats.absent_count}},
                              stats.keyphrase_count, "class");
  return doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace kpe
