#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "deloop/cycles.hpp"
#include "deloop/permutation.hpp"
#include "deloop/random.hpp"
#include "oracles.hpp"

using namespace deloop;

namespace {

oracle::Images images_of(const Bijection& e) { return {e.forward().begin(), e.forward().end()}; }

std::vector<std::vector<std::uint32_t>> atoms(const CycleForm& form) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& c : form) {
    auto& v = out.emplace_back();
    for (auto l : c) v.push_back(l.atom);
  }
  return out;
}

// Reachability by brute force: every y is some f^k(x).
bool reachable_everywhere(const oracle::Images& f) {
  const std::size_t n = f.size();
  if (n == 0) return false;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> hit(n, false);
    std::size_t y = x;
    for (std::size_t k = 0; k <= n; ++k, y = f[y]) hit[y] = true;
    for (bool h : hit)
      if (!h) return false;
  }
  return true;
}

// Every cycle decomposition of Fin n with the identity as glue: a set
// partition plus a cyclic order on each block.
std::vector<CycleDecomposition> all_identity_glued(std::size_t n) {
  const auto fin = LabeledSet::fin(n);
  std::vector<CycleDecomposition> out;
  for (const auto& rgs : oracle::restricted_growth_strings(n)) {
    const std::size_t m = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<std::uint32_t>> blocks(m);
    for (std::uint32_t i = 0; i < n; ++i) blocks[rgs[i]].push_back(i);
    // Cyclic orders: fix the minimum first and permute the rest.
    std::vector<std::vector<std::vector<std::uint32_t>>> orders(m);
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::uint32_t> rest(blocks[b].begin() + 1, blocks[b].end());
      do {
        auto cycle = std::vector<std::uint32_t>{blocks[b][0]};
        cycle.insert(cycle.end(), rest.begin(), rest.end());
        orders[b].push_back(cycle);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      CycleDecomposition dec{LabeledSet::fin(m), {}, Bijection::identity(fin)};
      for (std::size_t b = 0; b < m; ++b) {
        const auto& cycle = orders[b][pick[b]];
        std::vector<Label> members, images;
        for (auto v : blocks[b]) members.emplace_back(v);
        auto carrier = LabeledSet::from_labels(members);
        std::vector<Label> step(cycle.size());
        for (std::size_t i = 0; i < cycle.size(); ++i)
          step[carrier.position(Label(cycle[i]))] = Label(cycle[(i + 1) % cycle.size()]);
        dec.cycles.push_back(CyclicStructure::make(Bijection::from_labels(carrier, carrier, step)));
      }
      out.push_back(dec);
      std::size_t b = 0;
      while (b < m && ++pick[b] == orders[b].size()) pick[b++] = 0;
      if (b == m) break;
    }
  }
  return out;
}

}  // namespace

TEST(IsCyclic, MatchesReachabilityOnAllEndofunctions) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto fin = LabeledSet::fin(n);
    for (const auto& f : oracle::endofunctions(n)) {
      std::vector<Label> images;
      for (auto v : f) images.emplace_back(v);
      EXPECT_EQ(is_cyclic(fin, EndoFunction::from_labels(fin, images)), reachable_everywhere(f));
    }
  }
  EXPECT_THROW(is_cyclic(LabeledSet::fin(2), EndoFunction::from_bijection(succ_cycle(3))), Error);
}

TEST(CyclicStructure, RequiresOneOrbit) {
  EXPECT_THROW(CyclicStructure::make(Bijection::permutation({1, 0, 3, 2})), Error);
  EXPECT_THROW(CyclicStructure::make(Bijection::identity(LabeledSet())), Error);
  auto c = CyclicStructure::make(Bijection::permutation({2, 0, 1}));
  EXPECT_EQ(c.length(), 3u);
  EXPECT_EQ(c.orbit(), (std::vector<Label>{Label(0), Label(2), Label(1)}));
}

TEST(CycleDecompose, CanonicalFormMatchesOracle) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& e : symmetric_group(n)) {
      auto form = atoms(canonical_form(cycle_decompose(e)));
      std::vector<std::vector<std::uint32_t>> nontrivial;
      std::size_t fixed = 0;
      for (const auto& c : form) {
        if (c.size() > 1) nontrivial.push_back(c);
        else ++fixed;
      }
      EXPECT_EQ(nontrivial, oracle::nontrivial_cycles(images_of(e)));
      EXPECT_EQ(form.size(), oracle::cycle_count(images_of(e)));
      EXPECT_EQ(fixed + std::accumulate(nontrivial.begin(), nontrivial.end(), std::size_t{0},
                                        [](std::size_t s, const auto& c) { return s + c.size(); }),
                n);
    }
}

TEST(CycleDecompose, OrbitPartitionBlocksAreTheCycles) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_labeled_set(rng, 1 + rng() % 10);
    auto e = random_bijection(rng, x, x);
    auto p = orbit_partition(e);
    auto dec = cycle_decompose(e);
    ASSERT_EQ(p.block_count(), dec.cycles.size());
    for (const auto& c : dec.cycles)
      for (auto l : c.carrier().elements())
        EXPECT_EQ(p.block_of(dec.glue.preimage(l)), p.block_of(dec.glue.preimage(c.carrier()[0])));
  }
}

TEST(CycleDecompose, RoundTripOnRandomLabels) {
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_labeled_set(rng, rng() % 15);
    auto e = random_bijection(rng, x, x);
    EXPECT_EQ(recompose(cycle_decompose(e)), e);
  }
}

TEST(CycleDecompose, EveryIdentityGluedDecompositionIsHit) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto decs = all_identity_glued(n);
    EXPECT_EQ(decs.size(), oracle::factorial(n));
    std::set<oracle::Images> perms;
    for (const auto& d : decs) {
      auto e = recompose(d);
      perms.insert(images_of(e));
      EXPECT_EQ(canonical_form(cycle_decompose(e)), canonical_form(d));
    }
    EXPECT_EQ(perms.size(), oracle::factorial(n));
  }
}

TEST(CycleDecompose, RecomposeThroughNonIdentityGlue) {
  // Fin 3 -> {100, 101, 102}, with cycles (100 101) and (102).
  auto total = LabeledSet::from_labels({Label(100), Label(101), Label(102)});
  auto a = LabeledSet::from_labels({Label(100), Label(101)});
  auto b = LabeledSet::from_labels({Label(102)});
  CycleDecomposition dec{LabeledSet::fin(2),
                         {CyclicStructure::make(swap_two(a)), CyclicStructure::make(Bijection::identity(b))},
                         Bijection::from_labels(LabeledSet::fin(3), total, std::vector<Label>{Label(102), Label(100), Label(101)})};
  auto e = recompose(dec);
  // 1 -> 100 -> 101 -> 2, 0 -> 102 -> 0.
  EXPECT_EQ(images_of(e), (oracle::Images{0, 2, 1}));
  EXPECT_EQ(atoms(canonical_form(dec)), (std::vector<std::vector<std::uint32_t>>{{0}, {1, 2}}));
}

TEST(CycleDecompose, RejectsOverlappingCycles) {
  auto fin = LabeledSet::fin(2);
  CycleDecomposition dec{LabeledSet::fin(2),
                         {CyclicStructure::make(swap_two(fin)), CyclicStructure::make(swap_two(fin))},
                         Bijection::identity(fin)};
  try {
    recompose(dec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedDecomposition);
  }
}

TEST(Endofunctions, RoundTripOnAllSmallFunctions) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto fin = LabeledSet::fin(n);
    for (const auto& f : oracle::endofunctions(n)) {
      std::vector<Label> images;
      for (auto v : f) images.emplace_back(v);
      auto fn = EndoFunction::from_labels(fin, images);
      auto dec = decompose_endofunction(fn);
      EXPECT_EQ(recompose_endofunction(dec), fn);

      // Periodic points are exactly the tree roots and the cycle elements.
      std::set<std::uint32_t> periodic;
      for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t y = f[x];
        for (std::size_t k = 0; k < n && y != x; ++k) y = f[y];
        if (y == x) periodic.insert(x);
      }
      std::size_t on_cycles = 0, nodes = 0;
      for (const auto& c : dec.cycles) on_cycles += c.length();
      for (const auto& t : dec.trees) nodes += t.node_count();
      EXPECT_EQ(on_cycles, periodic.size());
      EXPECT_EQ(dec.trees.size(), periodic.size());
      EXPECT_EQ(nodes, n);
      std::set<std::uint32_t> roots;
      for (const auto& t : dec.trees) roots.insert(dec.glue.preimage(t.root).atom);
      EXPECT_EQ(roots, periodic);
    }
  }
}

TEST(Endofunctions, RoundTripOnRandomLabels) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_labeled_set(rng, 1 + rng() % 40);
    std::vector<Label> images;
    for (std::size_t i = 0; i < x.size(); ++i) images.push_back(x[rng() % x.size()]);
    auto f = EndoFunction::from_labels(x, images);
    auto dec = decompose_endofunction(f);
    EXPECT_EQ(recompose_endofunction(dec), f);
    EXPECT_EQ(canonical_form(decompose_endofunction(recompose_endofunction(dec))), canonical_form(dec));
  }
}

TEST(Endofunctions, PermutationsHaveTrivialTrees) {
  for (const auto& e : symmetric_group(4)) {
    auto dec = decompose_endofunction(EndoFunction::from_bijection(e));
    for (const auto& t : dec.trees) EXPECT_TRUE(t.children.empty());
    EXPECT_EQ(canonical_form(dec).cycles, canonical_form(cycle_decompose(e)));
  }
}
