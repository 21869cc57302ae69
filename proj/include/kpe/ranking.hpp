#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kpe/candidates.hpp"

namespace kpe {

struct ScoredPhrase {
  std::string text;  // surface form of the first occurrence
  std::string key;   // stem sequence
  double score = 0.0;
  std::size_t first_position = 0;
  std::size_t length = 0;
};

enum class Order { Descending, Ascending };

ScoredPhrase make_scored(const Candidate& c, double score);

/// Sorts by score in the given direction, then earlier first occurrence, then
/// shorter phrase, then lexicographic stem key.
void rank(std::vector<ScoredPhrase>& phrases, Order order = Order::Descending);

/// rank() then keep the first k.
std::vector<ScoredPhrase> top_k(std::vector<ScoredPhrase> phrases, std::size_t k,
                                Order order = Order::Descending);

}  // namespace kpe
