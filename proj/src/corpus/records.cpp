#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "kpe/corpus.hpp"
#include "json.hpp"

namespace kpe {
namespace {

using nlohmann::json;

constexpr std::string_view kFields[] = {"title", "body", "summary", "keyphrases", "category",
                                        "url"};

std::optional<std::string> parse_record(std::string_view line, NewsRecord& out) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    return std::string("malformed JSON: ") + e.what();
  }
  if (!obj.is_object()) return std::string("not a JSON object");
  for (auto field : kFields) {
    if (!obj.contains(field)) return "missing field: " + std::string(field);
  }
  for (auto field : kFields) {
    const auto& v = obj.at(field);
    if (field == "keyphrases") {
      if (!v.is_array()) return std::string("wrong type for field: keyphrases");
      for (const auto& kp : v) {
        if (!kp.is_string()) return std::string("wrong type for field: keyphrases");
      }
    } else if (!v.is_string()) {
      return "wrong type for field: " + std::string(field);
    }
  }
  out.title = obj.at("title").get<std::string>();
  out.body = obj.at("body").get<std::string>();
  out.summary = obj.at("summary").get<std::string>();
  out.keyphrases = obj.at("keyphrases").get<std::vector<std::string>>();
  out.category = obj.at("category").get<std::string>();
  out.url = obj.at("url").get<std::string>();
  return std::nullopt;
}

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

LoadResult load_records(std::istream& in) {
  LoadResult result;
  std::vector<std::optional<NewsRecord>> slots;
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> by_url;  // slot, line
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    NewsRecord record;
    if (auto err = parse_record(line, record)) {
      result.rejected.push_back({line_no, std::move(*err)});
      continue;
    }
    if (auto it = by_url.find(record.url); it != by_url.end()) {
      result.warnings.push_back("duplicate url " + record.url + " at line " +
                                std::to_string(line_no) + " replaces line " +
                                std::to_string(it->second.second));
      slots[it->second.first].reset();
      it->second = {slots.size(), line_no};
    } else {
      by_url.emplace(record.url, std::make_pair(slots.size(), line_no));
    }
    slots.emplace_back(std::move(record));
  }
  if (in.bad()) throw std::runtime_error("error while reading record stream");
  for (auto& s : slots) {
    if (s) result.records.push_back(std::move(*s));
  }
  return result;
}

LoadResult load_records_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_records(in);
}

std::string to_json_line(const NewsRecord& r) {
  nlohmann::ordered_json obj;
  obj["title"] = r.title;
  obj["body"] = r.body;
  obj["summary"] = r.summary;
  obj["keyphrases"] = r.keyphrases;
  obj["category"] = r.category;
  obj["url"] = r.url;
  return obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

void write_records(std::ostream& out, const std::vector<NewsRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

}  // namespace kpe
