#include <gtest/gtest.h>

#include "deloop/orientation.hpp"
#include "deloop/permutation.hpp"
#include "deloop/random.hpp"
#include "oracles.hpp"

using namespace deloop;

namespace {

oracle::Choices choices_of(const Orientation& u) {
  oracle::Choices out;
  const auto& x = u.carrier();
  for (std::uint32_t i = 0; i < x.size(); ++i)
    for (std::uint32_t j = i + 1; j < x.size(); ++j) out[{i, j}] = static_cast<std::uint32_t>(x.position(u.choice(x[i], x[j])));
  return out;
}

Orientation random_orientation(Rng& rng, const LabeledSet& x) {
  return Orientation::from_bits(x, rng() & full_mask(x.size()));
}

}  // namespace

TEST(PairIndex, EnumeratesPairsLexicographically) {
  for (std::size_t n = 2; n <= kMaxOrientationSize; ++n) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_EQ(pair_index(i, j, n), k++);
    EXPECT_EQ(k, pair_count(n));
  }
  EXPECT_EQ(full_mask(11), (std::uint64_t{1} << 55) - 1);
}

TEST(Orientation, CanonicalChoosesTheMaximum) {
  auto x = LabeledSet::from_labels({Label(3), Label(8), Label(20)});
  auto d = canonical_orientation(x);
  EXPECT_EQ(d.bits(), full_mask(3));
  EXPECT_EQ(d.choice(Label(20), Label(3)), Label(20));
  EXPECT_EQ(d.choice(Label(3), Label(8)), Label(8));
  EXPECT_THROW(d.choice(Label(3), Label(3)), Error);
  EXPECT_THROW(d.choice(Label(3), Label(4)), Error);
  try {
    canonical_orientation(LabeledSet::fin(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooSmall);
  }
}

TEST(Orientation, FromBitsGuards) {
  EXPECT_THROW(Orientation::from_bits(LabeledSet::fin(3), 0b1000), Error);
  try {
    Orientation::from_bits(LabeledSet::fin(12), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeGuard);
  }
  EXPECT_THROW(relative_inversions(canonical_orientation(LabeledSet::fin(3)),
                                   canonical_orientation(LabeledSet::from_labels({Label(0), Label(1), Label(5)}))),
               Error);
}

TEST(RelativeInversions, CountsDisagreeingPairs) {
  Rng rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    auto x = random_labeled_set(rng, 2 + rng() % 10);
    auto u = random_orientation(rng, x), v = random_orientation(rng, x);
    EXPECT_EQ(relative_inversions(u, v), oracle::disagreements(choices_of(u), choices_of(v)));
    EXPECT_EQ(relative_inversions(u, v), relative_inversions(v, u));
    EXPECT_EQ(relative_inversions(u, u), 0u);
  }
}

TEST(OrientationAction, MatchesChoiceTransportExhaustively) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto fin = LabeledSet::fin(n);
    for (const auto& e : symmetric_group(n)) {
      const oracle::Images p(e.forward().begin(), e.forward().end());
      for (std::uint64_t m = 0; m <= full_mask(n); ++m) {
        auto u = Orientation::from_bits(fin, m);
        EXPECT_EQ(choices_of(orientation_action(e, u)), oracle::transport(p, choices_of(u)));
      }
    }
  }
}

TEST(OrientationAction, IsFunctorialAcrossLabeledSets) {
  Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    auto x = random_labeled_set(rng, n), y = random_labeled_set(rng, n), z = random_labeled_set(rng, n);
    auto e = random_bijection(rng, x, y), f = random_bijection(rng, y, z);
    auto u = random_orientation(rng, x), v = random_orientation(rng, x);
    EXPECT_EQ(orientation_action(after(f, e), u), orientation_action(f, orientation_action(e, u)));
    EXPECT_EQ(orientation_action(Bijection::identity(x), u), u);
    // Transport preserves relative inversions.
    EXPECT_EQ(relative_inversions(orientation_action(e, u), orientation_action(e, v)), relative_inversions(u, v));
  }
}

TEST(OrientationAction, RelativeInversionsOfCanonicalEqualInversions) {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto d = canonical_orientation(LabeledSet::fin(n));
    for (const auto& e : symmetric_group(n))
      EXPECT_EQ(relative_inversions(d, orientation_action(e, d)), inversion_count(e));
  }
}

TEST(RelativeInversions, ParityIsAdditive) {
  Rng rng(23);
  for (int trial = 0; trial < 5000; ++trial) {
    auto x = random_labeled_set(rng, 2 + rng() % 10);
    auto u = random_orientation(rng, x), v = random_orientation(rng, x), w = random_orientation(rng, x);
    EXPECT_EQ(relative_inversions(u, w) % 2, (relative_inversions(u, v) + relative_inversions(v, w)) % 2);
  }
}
