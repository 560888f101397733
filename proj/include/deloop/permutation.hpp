#pragma once

// The sign homomorphism by inversion counting, the successor cycle and
// factorization into transpositions.
//
// A TranspositionList [t1, t2, ..., tk] denotes the product t1 o t2 o ... o tk:
// the left factor is outermost, so tk is applied first. Under this
// convention succ_cycle(k) == <0 1><1 2>...<k-2 k-1>.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "deloop/finite_core.hpp"

namespace deloop {

class SignValue {
 public:
  static constexpr SignValue plus() { return SignValue(1); }
  static constexpr SignValue minus() { return SignValue(-1); }
  static constexpr SignValue from_parity(std::size_t count) {
    return count % 2 == 0 ? plus() : minus();
  }

  constexpr int value() const { return value_; }
  constexpr bool is_plus() const { return value_ == 1; }
  /// Chart to Fin 2: +1 -> 0, -1 -> 1.
  constexpr std::uint32_t to_fin2() const { return value_ == 1 ? 0u : 1u; }
  static constexpr SignValue from_fin2(std::uint32_t bit) { return bit == 0 ? plus() : minus(); }

  friend constexpr SignValue operator*(SignValue a, SignValue b) {
    return SignValue(static_cast<signed char>(a.value_ * b.value_));
  }
  constexpr SignValue operator-() const { return SignValue(static_cast<signed char>(-value_)); }
  friend constexpr bool operator==(SignValue, SignValue) = default;

 private:
  constexpr explicit SignValue(int v) : value_(static_cast<signed char>(v)) {}
  signed char value_;
};

std::ostream& operator<<(std::ostream& os, SignValue s);

struct InversionPair {
  Label i;
  Label j;
  friend bool operator==(const InversionPair&, const InversionPair&) = default;
};

using TranspositionList = std::vector<Subset>;

/// Pairs i < j (label order on the domain) whose images are reversed, in
/// lexicographic order. Requires an endo-bijection.
std::vector<InversionPair> inversions(const Bijection& e);
std::size_t inversion_count(const Bijection& e);
SignValue sign_inversions(const Bijection& e);

/// i -> i+1 mod k on Fin k. Throws ZeroModulus for k == 0.
Permutation succ_cycle(std::size_t k);

/// Transpositions whose product (left factor outermost) is e. Cycles are
/// taken in order of their minimal label, and each cycle c0 -> c1 -> ... is
/// written as <c0 c1><c1 c2>...<c_{k-2} c_{k-1}>.
TranspositionList factor_into_transpositions(const Bijection& e);

/// t1 o t2 o ... o tk on x; the identity for an empty list.
Bijection product(const LabeledSet& x, const TranspositionList& factors);

}  // namespace deloop
