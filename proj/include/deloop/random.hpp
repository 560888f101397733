#pragma once

// Seeded generators for randomized checks. Random labeled sets draw their
// labels far above {0, ..., n-1} so that accidental reliance on canonical
// labels shows up.

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "deloop/finite_core.hpp"

namespace deloop {

using Rng = std::mt19937_64;

inline LabeledSet random_labeled_set(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> atom(1000, 1000000);
  std::unordered_set<std::uint32_t> used;
  std::vector<Label> labels;
  while (labels.size() < n) {
    auto a = atom(rng);
    if (used.insert(a).second) labels.emplace_back(a);
  }
  return LabeledSet::from_labels(std::move(labels));
}

inline Bijection random_bijection(Rng& rng, const LabeledSet& from, const LabeledSet& to) {
  std::vector<std::uint32_t> table(from.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint32_t>(i);
  std::shuffle(table.begin(), table.end(), rng);
  return Bijection::from_indices(from, to, std::move(table));
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  auto fin = LabeledSet::fin(n);
  return random_bijection(rng, fin, fin);
}

}  // namespace deloop
