#include <gtest/gtest.h>

#include "deloop/quotients.hpp"
#include "deloop/random.hpp"
#include "oracles.hpp"

using namespace deloop;

namespace {

struct Outcome {
  std::optional<Partition> partition;
  ErrorKind kind{};
  std::vector<Label> witness;
};

template <class Rel>
Outcome run(const LabeledSet& x, Rel rel, Execution exec) {
  try {
    return {partition_from_relation(x, rel, exec)};
  } catch (const RelationError& e) {
    return {std::nullopt, e.kind(), e.witness()};
  }
}

// The witness must certify the failure it names.
template <class Rel>
void expect_valid_witness(const Outcome& o, Rel rel) {
  const auto& w = o.witness;
  switch (o.kind) {
    case ErrorKind::NotReflexive:
      ASSERT_EQ(w.size(), 1u);
      EXPECT_FALSE(rel(w[0], w[0]));
      break;
    case ErrorKind::NotSymmetric:
      ASSERT_EQ(w.size(), 2u);
      EXPECT_TRUE(rel(w[0], w[1]));
      EXPECT_FALSE(rel(w[1], w[0]));
      break;
    case ErrorKind::NotTransitive:
      ASSERT_EQ(w.size(), 3u);
      EXPECT_TRUE(rel(w[0], w[1]));
      EXPECT_TRUE(rel(w[1], w[2]));
      EXPECT_FALSE(rel(w[0], w[2]));
      break;
    default:
      ADD_FAILURE() << "unexpected kind " << to_string(o.kind);
  }
}

bool is_equivalence(std::size_t n, const std::vector<bool>& m) {
  auto r = [&](std::size_t i, std::size_t j) { return m[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!r(i, i)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (r(i, j) != r(j, i)) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (r(i, j) && r(j, k) && !r(i, k)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Partition, FromBlocksValidates) {
  auto x = LabeledSet::fin(4);
  auto p = Partition::from_blocks(x, {{Label(3), Label(1)}, {Label(0), Label(2)}});
  EXPECT_EQ(p.block_count(), 2u);
  EXPECT_EQ(p.blocks()[0].members(), LabeledSet::from_labels({Label(0), Label(2)}));
  EXPECT_TRUE(p.same_block(Label(1), Label(3)));
  EXPECT_THROW(Partition::from_blocks(x, {{Label(0), Label(1)}, {Label(1), Label(2), Label(3)}}), Error);
  EXPECT_THROW(Partition::from_blocks(x, {{Label(0), Label(1)}, {Label(2)}}), Error);
  EXPECT_THROW(Partition::from_blocks(x, {{Label(0), Label(1), Label(2), Label(3)}, {}}), Error);
  EXPECT_THROW(Partition::from_blocks(x, {{Label(0), Label(1), Label(2), Label(9)}}), Error);
}

TEST(PartitionFromRelation, RecoversEverySetPartition) {
  for (std::size_t n = 0; n <= 6; ++n) {
    auto x = LabeledSet::fin(n);
    const auto all = oracle::restricted_growth_strings(n);
    EXPECT_EQ(all.size(), oracle::bell(n));
    for (const auto& rgs : all) {
      auto same = [&](Label a, Label b) { return rgs[a.atom] == rgs[b.atom]; };
      auto serial = partition_from_relation(x, same, Execution::serial);
      auto parallel = partition_from_relation(x, same, Execution::parallel);
      EXPECT_EQ(serial, parallel);
      EXPECT_EQ(serial, Partition::from_block_indices(x, rgs));
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) EXPECT_EQ(serial.same_block(Label(i), Label(j)), rgs[i] == rgs[j]);
    }
  }
  EXPECT_EQ(oracle::bell(5), 52u);
}

TEST(PartitionFromRelation, ClassifiesEveryRelationOnThreePoints) {
  const std::size_t n = 3;
  auto x = LabeledSet::fin(n);
  std::size_t equivalences = 0;
  for (std::uint32_t bits = 0; bits < (1u << (n * n)); ++bits) {
    std::vector<bool> m(n * n);
    for (std::size_t k = 0; k < n * n; ++k) m[k] = bits >> k & 1u;
    auto rel = [&](Label a, Label b) { return static_cast<bool>(m[a.atom * n + b.atom]); };
    auto serial = run(x, rel, Execution::serial);
    auto parallel = run(x, rel, Execution::parallel);
    EXPECT_EQ(serial.partition.has_value(), is_equivalence(n, m)) << "relation bits " << bits;
    EXPECT_EQ(parallel.partition, serial.partition);
    EXPECT_EQ(parallel.kind, serial.kind);
    EXPECT_EQ(parallel.witness, serial.witness);
    if (serial.partition) ++equivalences;
    else expect_valid_witness(serial, rel);
  }
  EXPECT_EQ(equivalences, oracle::bell(n));
}

TEST(PartitionFromRelation, WitnessesOnRandomRelations) {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    auto x = random_labeled_set(rng, n);
    // Perturb an equivalence relation in a few random spots.
    std::vector<std::uint32_t> cls(n);
    for (auto& c : cls) c = static_cast<std::uint32_t>(rng() % 3);
    std::vector<bool> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = cls[i] == cls[j];
    for (int k = rng() % 3; k > 0; --k) m[rng() % (n * n)] = rng() & 1u;
    auto rel = [&](Label a, Label b) { return static_cast<bool>(m[x.position(a) * n + x.position(b)]); };
    auto o = run(x, rel, Execution::serial);
    EXPECT_EQ(o.partition.has_value(), is_equivalence(n, m));
    if (!o.partition) expect_valid_witness(o, rel);
  }
}

TEST(Quotient, ClassesAreBlockMinima) {
  auto x = LabeledSet::from_labels({Label(4), Label(7), Label(9), Label(12)});
  auto p = Partition::from_blocks(x, {{Label(7), Label(12)}, {Label(4), Label(9)}});
  auto q = quotient(p);
  EXPECT_EQ(q.classes(), LabeledSet::from_labels({Label(4), Label(7)}));
  EXPECT_EQ(q.project(Label(12)), Label(7));
  EXPECT_EQ(q.project(Label(9)), Label(4));
}

TEST(Sigma, DecompositionRoundTrips) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    auto x = random_labeled_set(rng, n);
    std::vector<std::uint32_t> cls(n);
    for (auto& c : cls) c = static_cast<std::uint32_t>(rng() % 4);
    auto p = Partition::from_block_indices(x, cls);
    auto s = sigma_decomposition(p);
    EXPECT_EQ(s.index.size(), p.block_count());
    EXPECT_EQ(s.total, LabeledSet::fin(n));
    EXPECT_EQ(s.glue.domain(), x);
    EXPECT_EQ(partition_of(s), p);
    for (auto l : x.elements()) {
      auto [k, j] = s.locate(s.glue(l));
      EXPECT_EQ(s.fibers[k][j], l);
      EXPECT_EQ(k, p.block_of(l));
    }
  }
}
