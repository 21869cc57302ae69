#pragma once

#include <string_view>

// Built-in copies of the tables under data/, embedded at configure time.
namespace kpe::resources {

std::string_view normalization_map();
std::string_view persian_suffixes();
std::string_view persian_stopwords();
std::string_view persian_pos_lexicon();

}  // namespace kpe::resources
