#pragma once

// Decidable equivalence relations on finite sets, stored extensionally as
// partitions, together with quotient maps and sigma-decompositions.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "deloop/finite_core.hpp"

namespace deloop {

enum class Execution { serial, parallel };

class RelationError : public Error {
 public:
  RelationError(ErrorKind kind, std::vector<Label> witness, const std::string& what)
      : Error(kind, what), witness_(std::move(witness)) {}

  /// One label for NotReflexive, a pair for NotSymmetric, a triple
  /// (x, y, z) with x~y, y~z and not x~z for NotTransitive.
  const std::vector<Label>& witness() const noexcept { return witness_; }

 private:
  std::vector<Label> witness_;
};

class Partition {
 public:
  /// Validates that the blocks are nonempty, disjoint and cover the carrier.
  /// Throws MalformedPartition otherwise. Blocks are stored sorted by their
  /// minimal element.
  static Partition from_blocks(LabeledSet carrier, std::vector<std::vector<Label>> blocks);
  /// Block k holds the carrier elements whose index i has block_index[i] == k,
  /// after renumbering blocks by minimal element.
  static Partition from_block_indices(LabeledSet carrier,
                                      std::span<const std::uint32_t> block_index);

  const LabeledSet& carrier() const { return carrier_; }
  const std::vector<Subset>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  std::size_t block_of(Label x) const { return block_index_[carrier_.position(x)]; }
  std::size_t block_of_index(std::size_t i) const { return block_index_[i]; }
  bool same_block(Label x, Label y) const { return block_of(x) == block_of(y); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.carrier_ == b.carrier_ && a.block_index_ == b.block_index_;
  }

 private:
  Partition(LabeledSet carrier, std::vector<Subset> blocks, std::vector<std::uint32_t> index)
      : carrier_(std::move(carrier)), blocks_(std::move(blocks)), block_index_(std::move(index)) {}

  LabeledSet carrier_;
  std::vector<Subset> blocks_;
  std::vector<std::uint32_t> block_index_;
};

namespace detail {

[[noreturn]] void throw_relation_error(ErrorKind kind, std::vector<Label> witness);

}  // namespace detail

/// Builds the partition whose blocks are the classes of `rel`, a predicate
/// on pairs of labels. Elements are assigned greedily to the first class
/// representative they relate to; the relation is then compared against the
/// induced "same block" relation on every ordered pair. The two agree on all
/// pairs exactly when `rel` is an equivalence relation, so a single
/// disagreement yields a reflexivity, symmetry or transitivity witness.
template <class Relation>
Partition partition_from_relation(const LabeledSet& x, Relation&& rel,
                                  Execution exec = Execution::serial) {
  const std::size_t n = x.size();
  auto related = [&](std::size_t i, std::size_t j) -> bool { return rel(x[i], x[j]); };

  for (std::size_t i = 0; i < n; ++i)
    if (!related(i, i)) detail::throw_relation_error(ErrorKind::NotReflexive, {x[i]});

  std::vector<std::uint32_t> cls(n);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    while (k < reps.size() && !related(i, reps[k])) ++k;
    if (k == reps.size()) reps.push_back(i);
    cls[i] = static_cast<std::uint32_t>(k);
  }

  // First row holding a pair on which rel disagrees with the block relation.
  std::int64_t bad_row = std::numeric_limits<std::int64_t>::max();
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) reduction(min : bad_row) if (exec == Execution::parallel)
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (related(static_cast<std::size_t>(i), j) != (cls[i] == cls[j])) {
        bad_row = std::min(bad_row, i);
        break;
      }
    }
  }

  if (bad_row != std::numeric_limits<std::int64_t>::max()) {
    const auto i = static_cast<std::size_t>(bad_row);
    std::size_t j = 0;
    while (related(i, j) == (cls[i] == cls[j])) ++j;
    if (related(i, j)) {
      // i ~ j across classes; r is j's representative, so j ~ r.
      const std::size_t r = reps[cls[j]];
      if (!related(i, r)) detail::throw_relation_error(ErrorKind::NotTransitive, {x[i], x[j], x[r]});
      // i relates to two representatives; b was created after a, so b !~ a.
      const std::size_t a = std::min(reps[cls[i]], r);
      const std::size_t b = std::max(reps[cls[i]], r);
      if (!related(b, i)) detail::throw_relation_error(ErrorKind::NotSymmetric, {x[i], x[b]});
      detail::throw_relation_error(ErrorKind::NotTransitive, {x[b], x[i], x[a]});
    }
    // i !~ j inside one class with representative r: i ~ r and j ~ r.
    const std::size_t r = reps[cls[i]];
    if (!related(r, j)) detail::throw_relation_error(ErrorKind::NotSymmetric, {x[j], x[r]});
    detail::throw_relation_error(ErrorKind::NotTransitive, {x[i], x[r], x[j]});
  }

  return Partition::from_block_indices(x, cls);
}

/// The quotient of a partition: one class per block, labelled by the block's
/// minimal element, and the projection from the carrier onto the classes.
class QuotientSet {
 public:
  const LabeledSet& classes() const { return classes_; }
  const LabeledSet& carrier() const { return carrier_; }
  Label project(Label x) const { return classes_[projection_[carrier_.position(x)]]; }
  std::size_t project_index(std::size_t i) const { return projection_[i]; }

 private:
  friend QuotientSet quotient(const Partition& p);
  QuotientSet(LabeledSet carrier, LabeledSet classes, std::vector<std::uint32_t> projection)
      : carrier_(std::move(carrier)), classes_(std::move(classes)), projection_(std::move(projection)) {}

  LabeledSet carrier_;
  LabeledSet classes_;
  std::vector<std::uint32_t> projection_;
};

QuotientSet quotient(const Partition& p);

/// A set presented as the disjoint union of nonempty fibers over an index
/// set. The total set encodes the pair (k, j), the j-th element of fiber
/// k, as the label offset(k) + j, so `glue` is a genuine bijection from
/// the carrier onto the sum.
struct SigmaDecomposition {
  LabeledSet index;
  std::vector<LabeledSet> fibers;
  LabeledSet total;
  Bijection glue;

  /// (fiber position in `index`, element position in that fiber).
  std::pair<std::size_t, std::size_t> locate(Label summand) const;
};

SigmaDecomposition sigma_decomposition(const Partition& p);
/// Recovers the partition: blocks are preimages of the summands.
Partition partition_of(const SigmaDecomposition& s);

}  // namespace deloop
