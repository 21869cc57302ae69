#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "kpe/corpus.hpp"

namespace kpe {
namespace {

// Unbiased draw in [0, bound) by rejection. std::uniform_int_distribution is
// implementation-defined, which would make splits differ between toolchains.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

CorpusSplit split_corpus(const std::vector<NewsRecord>& records, std::size_t test_size,
                         std::size_t val_size, std::uint64_t seed) {
  if (test_size + val_size > records.size()) {
    throw std::invalid_argument("split needs " + std::to_string(test_size + val_size) +
                                " records (test " + std::to_string(test_size) + " + validation " +
                                std::to_string(val_size) + ") but only " +
                                std::to_string(records.size()) + " are available");
  }
  const auto perm = seeded_permutation(records.size(), seed);
  std::vector<std::size_t> test(perm.begin(), perm.begin() + test_size);
  std::vector<std::size_t> val(perm.begin() + test_size, perm.begin() + test_size + val_size);
  std::vector<std::size_t> train(perm.begin() + test_size + val_size, perm.end());
  for (auto* part : {&test, &val, &train}) std::sort(part->begin(), part->end());

  CorpusSplit split;
  for (auto i : train) split.train.push_back(records[i]);
  for (auto i : val) split.validation.push_back(records[i]);
  for (auto i : test) split.test.push_back(records[i]);
  return split;
}

}  // namespace kpe
