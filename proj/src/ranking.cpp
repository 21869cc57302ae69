#include <algorithm>

#include "kpe/ranking.hpp"

namespace kpe {

ScoredPhrase make_scored(const Candidate& c, double score) {
  return {c.surface(), c.key(), score, c.first_position(), c.length_tokens};
}

void rank(std::vector<ScoredPhrase>& phrases, Order order) {
  std::sort(phrases.begin(), phrases.end(), [order](const ScoredPhrase& a, const ScoredPhrase& b) {
    if (a.score != b.score) return order == Order::Descending ? a.score > b.score : a.score < b.score;
    if (a.first_position != b.first_position) return a.first_position < b.first_position;
    if (a.length != b.length) return a.length < b.length;
    return a.key < b.key;
  });
}

std::vector<ScoredPhrase> top_k(std::vector<ScoredPhrase> phrases, std::size_t k, Order order) {
  rank(phrases, order);
  if (phrases.size() > k) phrases.resize(k);
  return phrases;
}

}  // namespace kpe
