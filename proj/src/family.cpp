#include "deloop/family.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace deloop {

LabeledSet sign_set() { return LabeledSet::fin(2); }

TwoElementFamily::TwoElementFamily(std::string name, std::size_t arity, FiberFn fiber,
                                   ActionFn action, Bijection chart)
    : name_(std::move(name)),
      arity_(arity),
      fiber_(std::move(fiber)),
      action_(std::move(action)),
      chart_(std::move(chart)) {
  if (!(chart_.codomain() == sign_set()) || !(chart_.domain() == this->fiber(LabeledSet::fin(arity_))))
    throw Error(ErrorKind::DomainMismatch, "chart must map fiber(Fin n) onto the sign set");
}

LabeledSet TwoElementFamily::fiber(const LabeledSet& x) const {
  if (x.size() != arity_) {
    std::ostringstream msg;
    msg << name_ << " has arity " << arity_ << ", got a set of size " << x.size();
    throw Error(ErrorKind::ArityMismatch, msg.str());
  }
  auto f = fiber_(x);
  if (f.size() != 2) throw Error(ErrorKind::WrongCardinality, name_ + " produced a fiber without 2 elements");
  return f;
}

Bijection TwoElementFamily::action(const Bijection& e) const {
  auto from = fiber(e.domain());
  auto to = fiber(e.codomain());
  auto result = action_(e);
  if (!(result.domain() == from) || !(result.codomain() == to))
    throw Error(ErrorKind::DomainMismatch, name_ + " action does not map between the fibers");
  return result;
}

Label TwoElementFamily::base_point() const { return chart_.preimage(Label(SignValue::plus().to_fin2())); }

TwoElementFamily TwoElementFamily::with_action(std::string name, ActionFn action) const {
  return TwoElementFamily(std::move(name), arity_, fiber_, std::move(action), chart_);
}

TwoElementFamily TwoElementFamily::with_chart(std::string name, Bijection chart) const {
  return TwoElementFamily(std::move(name), arity_, fiber_, action_, std::move(chart));
}

SignValue sign_from_delooping(const TwoElementFamily& q, const Permutation& e) {
  if (!e.is_endo() || !e.domain().is_fin() || e.size() != q.arity()) {
    std::ostringstream msg;
    msg << "expected a permutation of Fin " << q.arity() << ", got " << e;
    throw Error(ErrorKind::ArityMismatch, msg.str());
  }
  const Label base = q.base_point();
  return q.action(e)(base) == base ? SignValue::plus() : SignValue::minus();
}

RecognitionReport check_recognition(const TwoElementFamily& q, std::size_t bound) {
  const std::size_t n = q.arity();
  if (n > bound) {
    std::ostringstream msg;
    msg << "recognition walks all of S_" << n << "; bound is " << bound;
    throw Error(ErrorKind::SizeGuard, msg.str());
  }
  const auto fin = LabeledSet::fin(n);
  const auto swap = swap_two(q.fiber(fin));
  const auto id = Bijection::identity(q.fiber(fin));

  RecognitionReport report;
  bool saw_swap = false;
  bool saw_identity = false;
  std::optional<Permutation> sign_failure;
  for (const auto& e : symmetric_group(n)) {
    auto a = q.action(e);
    saw_swap |= a == swap;
    saw_identity |= a == id;
    if (!sign_failure && sign_from_delooping(q, e) != sign_inversions(e)) sign_failure = e;
  }
  report.condition3_surjective = saw_swap && saw_identity;
  report.condition5_sign_matches = !sign_failure;

  report.condition4_transpositions_swap = true;
  for (const auto& pair : k_subsets(fin, 2)) {
    auto t = transposition_of_pair(fin, pair);
    if (!(q.action(t) == swap)) {
      report.condition4_transpositions_swap = false;
      report.counterexample = t;
      break;
    }
  }
  if (!report.counterexample && sign_failure) report.counterexample = sign_failure;
  return report;
}

Bijection standard_chart(const LabeledSet& x) {
  std::vector<std::uint32_t> table(x.size());
  std::iota(table.begin(), table.end(), 0u);
  return Bijection::from_indices(LabeledSet::fin(x.size()), x, std::move(table));
}

std::optional<Bijection> first_unnatural_square(const TwoElementFamily& source,
                                                const TwoElementFamily& target,
                                                const ComponentFn& phi,
                                                std::span<const Bijection> squares) {
  for (const auto& e : squares) {
    auto left = compose(phi(e.domain()), target.action(e));
    auto right = compose(source.action(e), phi(e.codomain()));
    if (!(left == right)) return e;
  }
  return std::nullopt;
}

namespace {

Bijection base_matching(const TwoElementFamily& source, const TwoElementFamily& target) {
  const auto fin = LabeledSet::fin(source.arity());
  const auto from = source.fiber(fin);
  const auto to = target.fiber(fin);
  const auto b = from.position(source.base_point());
  const auto b2 = static_cast<std::uint32_t>(to.position(target.base_point()));
  std::vector<std::uint32_t> table(2);
  table[b] = b2;
  table[1 - b] = 1 - b2;
  return Bijection::from_indices(from, to, std::move(table));
}

}  // namespace

FiberIsomorphism::FiberIsomorphism(TwoElementFamily source, TwoElementFamily target)
    : source_(std::move(source)), target_(std::move(target)), at_base_(base_matching(source_, target_)) {}

Bijection FiberIsomorphism::component(const LabeledSet& x) const {
  if (x == LabeledSet::fin(source_.arity())) return at_base_;
  const auto h = standard_chart(x);
  return compose(compose(invert(source_.action(h)), at_base_), target_.action(h));
}

ComponentFn FiberIsomorphism::as_function() const {
  return [self = *this](const LabeledSet& x) { return self.component(x); };
}

NaturalIsomorphism natural_isomorphism(const TwoElementFamily& source, const TwoElementFamily& target,
                                       std::span<const Bijection> squares) {
  if (source.arity() != target.arity())
    throw Error(ErrorKind::ArityMismatch, source.name() + " and " + target.name() + " differ in arity");
  for (const auto* q : {&source, &target})
    if (!check_recognition(*q, std::max(q->arity(), kRecognitionBound)).all_hold())
      throw Error(ErrorKind::NotADelooping, q->name() + " does not deloop the sign");

  const auto fin = LabeledSet::fin(source.arity());
  std::vector<Bijection> all(squares.begin(), squares.end());
  std::map<std::vector<Label>, LabeledSet> sets;
  auto note = [&](const LabeledSet& x) {
    sets.emplace(std::vector<Label>(x.elements().begin(), x.elements().end()), x);
  };
  note(fin);
  for (const auto& e : squares) {
    note(e.domain());
    note(e.codomain());
  }
  for (const auto& [key, x] : sets)
    if (!(x == fin)) all.push_back(standard_chart(x));

  NaturalIsomorphism result{FiberIsomorphism(source, target)};
  const auto phi = result.iso.as_function();
  if (auto bad = first_unnatural_square(source, target, phi, all)) {
    std::ostringstream msg;
    msg << "square over " << *bad << " does not commute";
    throw NaturalityError(*bad, msg.str());
  }
  result.squares_checked = all.size();

  // Flip the component on one fiber at a time; each flip must be caught.
  for (const auto& [key, x] : sets) {
    const auto flipped_at = x;
    ComponentFn flipped = [&](const LabeledSet& y) {
      auto c = phi(y);
      return y == flipped_at ? compose(c, swap_two(c.codomain())) : c;
    };
    const bool breaks_base = x == fin && flipped(fin)(source.base_point()) != target.base_point();
    if (breaks_base || first_unnatural_square(source, target, flipped, all)) ++result.fibers_pinned;
  }
  result.unique = result.fibers_pinned == sets.size();
  return result;
}

}  // namespace deloop
