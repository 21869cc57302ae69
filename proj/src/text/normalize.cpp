#include <charconv>
#include <unordered_map>

#include "kpe/resources.hpp"
#include "kpe/text.hpp"
#include "kpe/utf8.hpp"

namespace kpe {
namespace {

constexpr char32_t kDelete = 0xFFFFFFFF;

char32_t parse_hex(std::string_view field) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value, 16);
  if (ec != std::errc() || ptr != field.data() + field.size()) return kDelete;
  return static_cast<char32_t>(value);
}

std::unordered_map<char32_t, char32_t> parse_map(std::string_view table) {
  std::unordered_map<char32_t, char32_t> map;
  std::size_t pos = 0;
  while (pos < table.size()) {
    std::size_t eol = table.find('\n', pos);
    if (eol == std::string_view::npos) eol = table.size();
    std::string_view line = table.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) continue;
    const char32_t from = parse_hex(line.substr(0, tab));
    std::string_view to = line.substr(tab + 1);
    while (!to.empty() && (to.back() == '\r' || to.back() == ' ')) to.remove_suffix(1);
    map[from] = to == "-" ? kDelete : parse_hex(to);
  }
  return map;
}

const std::unordered_map<char32_t, char32_t>& char_map() {
  static const auto map = parse_map(resources::normalization_map());
  return map;
}

bool is_line_break(char32_t cp) {
  return cp == '\n' || cp == '\r' || cp == 0x85 || cp == 0x2028 || cp == 0x2029;
}

bool is_dropped(char32_t cp) {
  if (utf8::is_space(cp)) return false;
  if (cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp < 0xA0)) return true;
  return cp == 0x200B || cp == 0x200E || cp == 0x200F || (cp >= 0x202A && cp <= 0x202E);
}

}  // namespace

std::string normalize_text(std::string_view raw) {
  const auto& map = char_map();
  std::u32string mapped;
  mapped.reserve(raw.size());
  for (char32_t cp : utf8::decode(raw)) {
    if (auto it = map.find(cp); it != map.end()) {
      if (it->second == kDelete) continue;
      cp = it->second;
    }
    if (is_dropped(cp)) continue;
    mapped.push_back(cp);
  }

  std::u32string out;
  out.reserve(mapped.size());
  std::size_t i = 0;
  const std::size_t n = mapped.size();
  while (i < n) {
    const char32_t cp = mapped[i];
    if (!utf8::is_space(cp) && cp != utf8::kZwnj) {
      out.push_back(cp);
      ++i;
      continue;
    }
    bool has_space = false;
    bool has_break = false;
    std::size_t j = i;
    for (; j < n && (utf8::is_space(mapped[j]) || mapped[j] == utf8::kZwnj); ++j) {
      has_space = has_space || utf8::is_space(mapped[j]);
      has_break = has_break || is_line_break(mapped[j]);
    }
    const bool at_start = out.empty();
    const bool at_end = j == n;
    if (!at_start && !at_end) {
      if (has_space) {
        out.push_back(has_break ? U'\n' : U' ');
      } else if (utf8::is_word_char(out.back()) && utf8::is_word_char(mapped[j])) {
        out.push_back(utf8::kZwnj);
      }
    }
    i = j;
  }
  return utf8::encode(out);
}

}  // namespace kpe
