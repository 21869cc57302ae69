#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "kpe/stat_models.hpp"

namespace kpe {

std::size_t DocumentFrequencyTable::count(const std::string& key) const {
  auto it = df_.find(key);
  return it == df_.end() ? 1 : it->second;
}

void DocumentFrequencyTable::Builder::add_document(const ProcessedDocument& doc) {
  std::vector<std::string> keys;
  for (const auto& c : ngram_candidates(doc, max_n_)) keys.push_back(c.key());
  add_terms(keys);
}

void DocumentFrequencyTable::Builder::add_terms(std::span<const std::string> distinct_keys) {
  ++documents_;
  std::unordered_set<std::string_view> seen;
  for (const auto& k : distinct_keys) {
    if (seen.insert(k).second) ++df_[k];
  }
}

DocumentFrequencyTable DocumentFrequencyTable::Builder::build() && {
  if (documents_ == 0) throw std::invalid_argument("document frequency table needs at least one document");
  DocumentFrequencyTable t;
  t.total_documents_ = documents_;
  t.max_n_ = max_n_;
  t.df_ = std::move(df_);
  return t;
}

DocumentFrequencyTable build_df(std::span<const ProcessedDocument> documents, std::size_t max_n) {
  DocumentFrequencyTable::Builder builder(max_n);
  for (const auto& d : documents) builder.add_document(d);
  return std::move(builder).build();
}

// Format: "KPE-DF\t<version>", "N\t<count>", "max_n\t<n>", then one
// "<term>\t<count>" line per term in byte order.
void DocumentFrequencyTable::save(std::ostream& out) const {
  out << kMagic << '\t' << kVersion << '\n';
  out << "N\t" << total_documents_ << '\n';
  out << "max_n\t" << max_n_ << '\n';
  std::vector<std::pair<std::string_view, std::size_t>> rows(df_.begin(), df_.end());
  std::sort(rows.begin(), rows.end());
  for (const auto& [term, n] : rows) out << term << '\t' << n << '\n';
}

void DocumentFrequencyTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  save(out);
  if (!out) throw std::runtime_error("error writing " + path.string());
}

namespace {

std::size_t parse_count(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("df table line " + std::to_string(line_no) + ": bad count '" +
                             std::string(field) + "'");
  }
  return value;
}

}  // namespace

DocumentFrequencyTable DocumentFrequencyTable::load(std::istream& in) {
  DocumentFrequencyTable t;
  std::string line;
  std::size_t line_no = 0;
  auto next = [&](std::string_view expect_key) {
    if (!std::getline(in, line)) throw std::runtime_error("df table truncated");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tab = line.find('\t');
    if (tab == std::string::npos || std::string_view(line).substr(0, tab) != expect_key) {
      throw std::runtime_error("df table line " + std::to_string(line_no) + ": expected '" +
                               std::string(expect_key) + "'");
    }
    return std::string_view(line).substr(tab + 1);
  };
  const auto version = parse_count(next(kMagic), line_no);
  if (version != static_cast<std::size_t>(kVersion)) {
    throw std::runtime_error("unsupported df table version " + std::to_string(version));
  }
  t.total_documents_ = parse_count(next("N"), line_no);
  t.max_n_ = parse_count(next("max_n"), line_no);
  if (t.total_documents_ == 0) throw std::runtime_error("df table has N = 0");
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("df table line " + std::to_string(line_no) + ": missing tab");
    }
    const auto n = parse_count(std::string_view(line).substr(tab + 1), line_no);
    if (n == 0 || n > t.total_documents_) {
      throw std::runtime_error("df table line " + std::to_string(line_no) + ": count " +
                               std::to_string(n) + " outside [1, N]");
    }
    t.df_[line.substr(0, tab)] = n;
  }
  return t;
}

DocumentFrequencyTable DocumentFrequencyTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load(in);
}

double tfidf_idf(std::size_t total_documents, std::size_t doc_count) {
  return std::log(1.0 + static_cast<double>(total_documents) / static_cast<double>(doc_count));
}

}  // namespace kpe
