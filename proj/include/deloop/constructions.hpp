#pragma once

// Four two-element families that deloop the sign homomorphism, each a
// quotient of a set D_X built functorially from an n-element set X:
//
//   cartier      orientations of the complete graph on X, modulo an even
//                number of relative inversions (never consults the sign)
//   simpson      bijections Fin n -> X, f ~ g iff sign(g^-1 o f) = +1
//   orbit        (Fin n -> X) x {+1, -1} modulo the S_n action
//                alpha . (h, s) = (h o alpha^-1, sign(alpha) s)
//   fixed-point  S_n-equivariant functions (Fin n -> X) -> {+1, -1}
//
// Every family has fiber {0, 1} over every X. Label 0 is the class of the
// canonical representative over X: the canonical orientation, the standard
// chart, (standard chart, +1), and the element with value +1 at the
// standard chart respectively. Each model exposes representatives, the
// transport along bijections and the projection onto {0, 1}, so the
// quotient maps themselves can be tested for naturality.

#include <array>
#include <cstdint>
#include <vector>

#include "deloop/family.hpp"
#include "deloop/orientation.hpp"
#include "deloop/quotients.hpp"

namespace deloop {

struct CartierModel {
  using Element = Orientation;
  /// The canonical orientation and the one differing on the first pair.
  static std::array<Orientation, 2> representatives(const LabeledSet& x);
  static Orientation transport(const Bijection& e, const Orientation& u) {
    return orientation_action(e, u);
  }
  /// Parity of relative_inversions(canonical_orientation(x), u).
  static std::uint32_t project(const LabeledSet& x, const Orientation& u);
};

struct SimpsonModel {
  using Element = Bijection;  // Fin n -> X
  static std::array<Bijection, 2> representatives(const LabeledSet& x);
  static Bijection transport(const Bijection& e, const Bijection& f) { return after(e, f); }
  /// 0 iff f is related to the standard chart.
  static std::uint32_t project(const LabeledSet& x, const Bijection& f);
};

struct OrbitElement {
  Bijection chart;  // Fin n -> X
  SignValue sign;
  friend bool operator==(const OrbitElement&, const OrbitElement&) = default;
};

struct OrbitModel {
  using Element = OrbitElement;
  static std::array<OrbitElement, 2> representatives(const LabeledSet& x);
  static OrbitElement transport(const Bijection& e, const OrbitElement& b) {
    return {after(e, b.chart), b.sign};
  }
  /// The S_n action alpha . (h, s) = (h o alpha^-1, sign(alpha) s).
  static OrbitElement act(const Permutation& alpha, const OrbitElement& b);
  /// 0 iff b lies in the orbit of (standard chart, +1).
  static std::uint32_t project(const LabeledSet& x, const OrbitElement& b);
};

/// An equivariant function f : (Fin n -> X) -> {+1, -1}, determined by its
/// value at one reference bijection through f(h o alpha^-1) = sign(alpha) f(h).
struct FixedPointElement {
  Bijection reference;  // Fin n -> X
  SignValue value_at_reference;

  SignValue evaluate(const Bijection& h) const;
  /// Values on enumerate_bijections(Fin n, X), in that order.
  std::vector<SignValue> table() const;
};

struct FixedPointModel {
  using Element = FixedPointElement;
  static std::array<FixedPointElement, 2> representatives(const LabeledSet& x);
  /// A_e(f)(h) = f(e^-1 o h).
  static FixedPointElement transport(const Bijection& e, const FixedPointElement& f) {
    return {after(e, f.reference), f.value_at_reference};
  }
  static std::uint32_t project(const LabeledSet& x, const FixedPointElement& f);
};

/// Throw ArityTooSmall for n < 2; simpson and orbit throw SizeGuard above
/// kEnumerationBound and cartier above kMaxOrientationSize.
TwoElementFamily cartier_delooping(std::size_t n);
TwoElementFamily simpson_delooping(std::size_t n);
TwoElementFamily orbit_delooping(std::size_t n);
TwoElementFamily fixed_point_delooping(std::size_t n);

/// All four, in the order fixed, orbit, simpson, cartier.
std::vector<TwoElementFamily> all_deloopings(std::size_t n);

// Explicit quotients, computed without the models' projections.

/// Labels of D_X for Cartier: every mask below 2^C(n,2).
LabeledSet orientation_codes(const LabeledSet& x);
/// Classes of orientations of x under "even number of relative inversions".
Partition cartier_classes(const LabeledSet& x, Execution exec = Execution::serial);
/// Classes of enumerate_bijections(Fin n, x) under sign(g^-1 o f) = +1; the
/// carrier labels index that enumeration.
Partition simpson_classes(const LabeledSet& x, Execution exec = Execution::serial);
/// Orbits of the S_n action on (Fin n -> x) x {+1, -1}, found by expanding
/// each orbit with every alpha. Label 2k + s encodes (k-th bijection, s),
/// s = 0 for +1.
Partition orbit_classes(const LabeledSet& x);
OrbitElement decode_orbit_element(const LabeledSet& x, Label code);

/// Every table S_n -> {+1, -1} (indexed by symmetric_group(n)) fixed by the
/// action (alpha . f)(h) = sign(alpha) f(h o alpha^-1). Enumerates 2^(n!)
/// tables; throws SizeGuard for n > 4.
std::vector<std::vector<SignValue>> exhaustive_fixed_points(std::size_t n,
                                                            Execution exec = Execution::parallel);

/// The even permutations of Fin n, lexicographic. Throws ArityTooSmall for
/// n < 2 and SizeGuard above kEnumerationBound.
std::vector<Permutation> alternating_kernel(std::size_t n);

}  // namespace deloop
