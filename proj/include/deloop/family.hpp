#pragma once

// Two-element families over n-element sets: a fiber for every n-element
// labeled set, a functorial action on bijections, and a chart identifying
// the fiber over Fin n with {+1, -1}. This is the finite stand-in for a
// pointed map into the classifying type of S_2; the recognition checker and
// natural isomorphism below test when such a family deloops the sign.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deloop/finite_core.hpp"
#include "deloop/permutation.hpp"

namespace deloop {

/// Largest arity for which check_recognition walks all of S_n by default.
inline constexpr std::size_t kRecognitionBound = 6;

/// {0, 1} read as {+1, -1} through SignValue::from_fin2.
LabeledSet sign_set();

class TwoElementFamily {
 public:
  using FiberFn = std::function<LabeledSet(const LabeledSet&)>;
  using ActionFn = std::function<Bijection(const Bijection&)>;

  /// `chart` must map fiber(Fin n) onto sign_set().
  TwoElementFamily(std::string name, std::size_t arity, FiberFn fiber, ActionFn action, Bijection chart);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }

  /// Throws ArityMismatch unless |x| == arity().
  LabeledSet fiber(const LabeledSet& x) const;
  /// The induced bijection fiber(e.domain()) -> fiber(e.codomain()).
  Bijection action(const Bijection& e) const;
  const Bijection& chart() const { return chart_; }
  /// The element of fiber(Fin n) charted to +1.
  Label base_point() const;

  /// Same fibers and chart, different action. Used to build test variants.
  TwoElementFamily with_action(std::string name, ActionFn action) const;
  TwoElementFamily with_chart(std::string name, Bijection chart) const;
  const ActionFn& action_fn() const { return action_; }

 private:
  std::string name_;
  std::size_t arity_;
  FiberFn fiber_;
  ActionFn action_;
  Bijection chart_;
};

/// +1 iff the action of e on fiber(Fin n) fixes the base point.
/// Throws ArityMismatch unless e is a permutation of Fin arity().
SignValue sign_from_delooping(const TwoElementFamily& q, const Permutation& e);

struct RecognitionReport {
  /// Some permutation acts by the swap, some by the identity: the action
  /// S_n -> Aut(fiber(Fin n)) is onto.
  bool condition3_surjective = false;
  /// Every transposition acts by swap_two.
  bool condition4_transpositions_swap = false;
  /// sign_from_delooping agrees with sign_inversions on all of S_n.
  bool condition5_sign_matches = false;
  std::optional<Permutation> counterexample;

  bool all_hold() const {
    return condition3_surjective && condition4_transpositions_swap && condition5_sign_matches;
  }
  bool consistent() const {
    return condition3_surjective == condition4_transpositions_swap &&
           condition4_transpositions_swap == condition5_sign_matches;
  }
};

/// Evaluates the three finite recognition conditions by exhausting S_n.
/// Throws SizeGuard when arity() > bound.
RecognitionReport check_recognition(const TwoElementFamily& q, std::size_t bound = kRecognitionBound);

/// The lexicographically least bijection Fin n -> x (i -> i-th label).
Bijection standard_chart(const LabeledSet& x);

using ComponentFn = std::function<Bijection(const LabeledSet&)>;

class NaturalityError : public Error {
 public:
  NaturalityError(Bijection square, const std::string& what)
      : Error(ErrorKind::NaturalityFailure, what), square_(std::move(square)) {}
  /// The bijection e : X -> Y whose square fails to commute.
  const Bijection& square() const { return square_; }

 private:
  Bijection square_;
};

/// First e among `squares` with target.action(e) o phi(X) != phi(Y) o source.action(e).
std::optional<Bijection> first_unnatural_square(const TwoElementFamily& source,
                                                const TwoElementFamily& target,
                                                const ComponentFn& phi,
                                                std::span<const Bijection> squares);

/// A base-point-preserving family of fiber bijections, transported from
/// Fin n to every other set along standard_chart.
class FiberIsomorphism {
 public:
  FiberIsomorphism(TwoElementFamily source, TwoElementFamily target);

  const Bijection& at_base() const { return at_base_; }
  Bijection component(const LabeledSet& x) const;
  ComponentFn as_function() const;

 private:
  TwoElementFamily source_;
  TwoElementFamily target_;
  Bijection at_base_;
};

struct NaturalIsomorphism {
  FiberIsomorphism iso;
  std::size_t squares_checked = 0;
  /// Fibers on which the alternative bijection was shown to break naturality
  /// or base points.
  std::size_t fibers_pinned = 0;
  /// Every tested fiber was pinned.
  bool unique = false;
};

/// Builds the base-point-preserving natural family source => target and
/// checks it on `squares` (plus standard_chart of every set they touch).
/// Throws ArityMismatch, NotADelooping (either family fails recognition) or
/// NaturalityError.
NaturalIsomorphism natural_isomorphism(const TwoElementFamily& source, const TwoElementFamily& target,
                                       std::span<const Bijection> squares);

}  // namespace deloop
