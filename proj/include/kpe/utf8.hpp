#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kpe::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;
inline constexpr char32_t kZwnj = 0x200C;

// Invalid byte sequences decode to U+FFFD, one per offending byte.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view codepoints);
void append(std::string& out, char32_t cp);

bool is_valid(std::string_view text);
std::size_t length(std::string_view text);

bool is_space(char32_t cp);
bool is_punctuation(char32_t cp);
// Letters, digits, marks and ZWNJ: anything that may appear inside a word.
bool is_word_char(char32_t cp);
bool is_ascii_digit(char32_t cp);

}  // namespace kpe::utf8
