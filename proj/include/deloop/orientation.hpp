#pragma once

// Orientations of the complete graph on a labeled set: a choice of one
// endpoint for every 2-element subset. Pairs {x_i, x_j} with i < j (label
// order) are numbered lexicographically and bit k is set iff pair k chooses
// its larger element.

#include <cstdint>
#include <utility>

#include "deloop/finite_core.hpp"

namespace deloop {

/// C(11, 2) = 55 pairs still fit a 64-bit mask.
inline constexpr std::size_t kMaxOrientationSize = 11;

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Lexicographic number of the pair (i, j), i < j, among the pairs of Fin n.
constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

class Orientation {
 public:
  /// Throws SizeGuard above kMaxOrientationSize; bits beyond C(n, 2) must be clear.
  static Orientation from_bits(LabeledSet carrier, std::uint64_t bits);

  const LabeledSet& carrier() const { return carrier_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t pair_count() const { return deloop::pair_count(carrier_.size()); }

  /// The element chosen from {a, b}; throws NotMember / WrongCardinality.
  Label choice(Label a, Label b) const;
  bool chooses_larger(std::size_t i, std::size_t j) const {
    return (bits_ >> pair_index(i, j, carrier_.size())) & 1u;
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.bits_ == b.bits_ && a.carrier_ == b.carrier_;
  }

 private:
  Orientation(LabeledSet carrier, std::uint64_t bits) : carrier_(std::move(carrier)), bits_(bits) {}
  LabeledSet carrier_;
  std::uint64_t bits_;
};

/// Number of pairs on which u and v choose differently. Throws CarrierMismatch.
std::size_t relative_inversions(const Orientation& u, const Orientation& v);

/// Chooses the label-order maximum of every pair. Throws TooSmall if |x| < 2.
Orientation canonical_orientation(const LabeledSet& x);

/// Transport along e : X -> Y, choosing e(u(e^-1 P)) on each pair P of Y.
/// Throws CarrierMismatch unless u lives on e.domain().
Orientation orientation_action(const Bijection& e, const Orientation& u);

/// Mask with the low C(n, 2) bits set.
constexpr std::uint64_t full_mask(std::size_t n) {
  const auto k = pair_count(n);
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

}  // namespace deloop
