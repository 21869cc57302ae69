#include "kpe/text.hpp"
#include "kpe/utf8.hpp"

namespace kpe {

std::vector<RawToken> tokenize(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<RawToken> tokens;
  std::size_t run_start = 0;
  std::u32string run;

  auto flush = [&] {
    if (!run.empty()) {
      tokens.push_back({utf8::encode(run), run_start});
      run.clear();
    }
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (utf8::is_word_char(cp)) {
      if (run.empty()) run_start = i;
      run.push_back(cp);
    } else if (utf8::is_punctuation(cp)) {
      flush();
      std::string s;
      utf8::append(s, cp);
      tokens.push_back({std::move(s), i});
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

namespace {

bool is_terminator(char32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == 0x061F || cp == 0x061B;
}

bool is_line_break(char32_t cp) {
  return cp == '\n' || cp == '\r' || cp == 0x85 || cp == 0x2028 || cp == 0x2029;
}

}  // namespace

std::vector<SentenceSpan> split_sentences(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  const std::size_t n = cps.size();
  std::vector<SentenceSpan> spans;
  std::size_t start = 0;
  std::size_t i = 0;

  auto close_at = [&](std::size_t j) {
    while (j < n && utf8::is_space(cps[j])) ++j;
    spans.push_back({start, j});
    start = j;
    i = j;
  };

  while (i < n) {
    const char32_t cp = cps[i];
    if (is_line_break(cp)) {
      if (i > start) {
        close_at(i + 1);
      } else {
        ++i;
      }
      continue;
    }
    if (is_terminator(cp)) {
      // "." only ends a sentence before whitespace, end of text or another
      // terminator, so decimals and abbreviations inside words survive.
      if (cp == '.' && i + 1 < n && !utf8::is_space(cps[i + 1]) && !is_terminator(cps[i + 1])) {
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      while (j < n && is_terminator(cps[j])) ++j;
      close_at(j);
      continue;
    }
    ++i;
  }
  if (start < n) {
    if (spans.empty()) {
      spans.push_back({start, n});
    } else {
      bool only_space = true;
      for (std::size_t k = start; k < n && only_space; ++k) only_space = utf8::is_space(cps[k]);
      if (only_space) {
        spans.back().end = n;
      } else {
        spans.push_back({start, n});
      }
    }
  }
  return spans;
}

}  // namespace kpe
