#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kpe/resources.hpp"
#include "kpe/text.hpp"
#include "kpe/utf8.hpp"

namespace kpe {

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Noun: return "NOUN";
    case PosTag::Adj: return "ADJ";
    case PosTag::Verb: return "VERB";
    case PosTag::Num: return "NUM";
    case PosTag::Punct: return "PUNCT";
    case PosTag::Other: return "OTHER";
  }
  return "OTHER";
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  for (PosTag t : {PosTag::Noun, PosTag::Adj, PosTag::Verb, PosTag::Num, PosTag::Punct,
                   PosTag::Other}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    fn(line);
  }
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

// --- stopwords --------------------------------------------------------------

StopwordList StopwordList::parse(std::string_view text) {
  std::unordered_set<std::string> words;
  for_each_line(text, [&](std::string_view line) {
    std::string w = normalize_text(line);
    if (!w.empty()) words.insert(ascii_lower(w));
  });
  return StopwordList(std::move(words));
}

StopwordList StopwordList::persian() {
  static const StopwordList list = parse(resources::persian_stopwords());
  return list;
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

bool StopwordList::contains(std::string_view word) const {
  return words_.count(ascii_lower(word)) > 0;
}

// --- tagger -----------------------------------------------------------------

std::unordered_map<std::string, PosTag> LexiconTagger::parse_lexicon(std::string_view text) {
  std::unordered_map<std::string, PosTag> lexicon;
  for_each_line(text, [&](std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) return;
    auto tag = parse_pos_tag(line.substr(tab + 1));
    if (!tag) return;
    std::string w = normalize_text(line.substr(0, tab));
    if (!w.empty()) lexicon[ascii_lower(w)] = *tag;
  });
  return lexicon;
}

LexiconTagger::LexiconTagger() : lexicon_(parse_lexicon(resources::persian_pos_lexicon())) {}

LexiconTagger::LexiconTagger(std::unordered_map<std::string, PosTag> lexicon)
    : lexicon_(std::move(lexicon)) {}

LexiconTagger LexiconTagger::load(const std::filesystem::path& path) {
  return LexiconTagger(parse_lexicon(read_file(path)));
}

PosTag LexiconTagger::tag_one(const Token& token) const {
  if (all_digits(token.surface)) return PosTag::Num;
  const auto cps = utf8::decode(token.surface);
  if (cps.size() == 1 && utf8::is_punctuation(cps.front())) return PosTag::Punct;
  if (auto it = lexicon_.find(ascii_lower(token.surface)); it != lexicon_.end()) return it->second;
  if (auto it = lexicon_.find(token.stem); it != lexicon_.end()) return it->second;
  return PosTag::Noun;
}

std::vector<PosTag> LexiconTagger::tag(std::span<const Token> tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const auto& t : tokens) tags.push_back(tag_one(t));
  return tags;
}

void tag_pos(std::span<Token> tokens, const PosTagger& tagger) {
  const auto tags = tagger.tag(tokens);
  if (tags.size() != tokens.size()) {
    throw std::logic_error("POS tagger returned " + std::to_string(tags.size()) + " tags for " +
                           std::to_string(tokens.size()) + " tokens");
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].pos = tags[i];
}

}  // namespace kpe
