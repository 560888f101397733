#pragma once

// The invariant suite behind `deloop verify`: functor laws, fiber sizes,
// naturality of the quotient maps, label independence, recognition, sign
// agreement, per-construction class counts and uniqueness of the natural
// isomorphism between constructions.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deloop/family.hpp"
#include "deloop/random.hpp"

namespace deloop {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check) : name(std::move(check)) {}

  std::string name;
  bool passed = true;
  bool skipped = false;
  std::size_t cases = 0;
  /// Reproducible input for the first failure (or the reason for a skip).
  std::string detail;
};

struct VerifyReport {
  VerifyReport() = default;
  VerifyReport(std::string name, std::size_t size, std::uint64_t s) : construction(std::move(name)), n(size), seed(s) {}

  std::string construction;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
};

struct VerifyOptions {
  std::size_t n = 4;
  /// "all", "fixed", "orbit", "simpson" or "cartier".
  std::string construction = "all";
  bool exhaustive_fixed = false;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kVerifyMinN = 2;
inline constexpr std::size_t kVerifyMaxN = 6;

/// Builds the named family; throws ParseError for an unknown name.
TwoElementFamily make_delooping(const std::string& name, std::size_t n);
std::vector<std::string> construction_names();

/// action(id) = id over random sets, and action(f o e) = action(f) o action(e):
/// exhaustive over S_n x S_n for n <= 4, `random_pairs` random composable
/// pairs across random labeled sets otherwise.
CheckResult check_functor_laws(const TwoElementFamily& q, Rng& rng, std::size_t random_pairs = 1000);
CheckResult check_fiber_cardinality(const TwoElementFamily& q, Rng& rng, std::size_t sets = 50);
CheckResult check_transposition_swap(const TwoElementFamily& q);
/// Projecting then acting equals transporting then projecting, for every
/// e in S_n (n <= 5) and `random_bijections` bijections between random sets.
CheckResult check_quotient_naturality(const TwoElementFamily& q, Rng& rng,
                                      std::size_t random_bijections = 100);
/// action(r o g o r^-1) = action(r) o action(g) o action(r)^-1 and the
/// element-level square for a random relabeling r : X -> Y.
CheckResult check_label_independence(const TwoElementFamily& q, Rng& rng, std::size_t trials);
CheckResult check_sign_agreement(const TwoElementFamily& q);
CheckResult check_recognition_holds(const TwoElementFamily& q);

std::vector<VerifyReport> run_verify(const VerifyOptions& options);

}  // namespace deloop
