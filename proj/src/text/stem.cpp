#include <charconv>

#include "kpe/resources.hpp"
#include "kpe/text.hpp"
#include "kpe/utf8.hpp"

namespace kpe {

std::vector<SuffixRule> Stemmer::parse_rules(std::string_view table) {
  std::vector<SuffixRule> rules;
  std::size_t pos = 0;
  while (pos < table.size()) {
    std::size_t eol = table.find('\n', pos);
    if (eol == std::string_view::npos) eol = table.size();
    std::string_view line = table.substr(pos, eol - pos);
    pos = eol + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    SuffixRule rule;
    const auto tab = line.find('\t');
    rule.suffix = utf8::decode(line.substr(0, tab));
    if (tab != std::string_view::npos) {
      const auto field = line.substr(tab + 1);
      std::size_t min = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), min);
      if (ec == std::errc() && min > 0) rule.min_base_length = min;
    }
    if (!rule.suffix.empty()) rules.push_back(std::move(rule));
  }
  return rules;
}

Stemmer::Stemmer() : rules_(parse_rules(resources::persian_suffixes())) {}

Stemmer::Stemmer(std::vector<SuffixRule> rules) : rules_(std::move(rules)) {
  for (auto& r : rules_) {
    if (r.min_base_length == 0) r.min_base_length = 1;
  }
}

std::string Stemmer::stem(std::string_view surface) const {
  std::u32string word = utf8::decode(surface);
  for (auto& cp : word) {
    if (cp >= 'A' && cp <= 'Z') cp = cp - 'A' + 'a';
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules_) {
      if (word.size() < rule.suffix.size() + rule.min_base_length) continue;
      if (word.compare(word.size() - rule.suffix.size(), rule.suffix.size(), rule.suffix) != 0) {
        continue;
      }
      word.resize(word.size() - rule.suffix.size());
      while (word.size() > 1 && word.back() == utf8::kZwnj) word.pop_back();
      changed = true;
      break;
    }
  }
  if (word.empty()) return std::string(surface);
  return utf8::encode(word);
}

std::string stem(std::string_view surface) {
  static const Stemmer stemmer;
  return stemmer.stem(surface);
}

}  // namespace kpe
