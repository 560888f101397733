#include "deloop/constructions.hpp"

#include <bit>
#include <sstream>

#include "deloop/kernels.hpp"

namespace deloop {

// ---------------------------------------------------------------------------
// Models

std::array<Orientation, 2> CartierModel::representatives(const LabeledSet& x) {
  auto d = canonical_orientation(x);
  return {d, Orientation::from_bits(x, d.bits() ^ 1u)};
}

std::uint32_t CartierModel::project(const LabeledSet& x, const Orientation& u) {
  return static_cast<std::uint32_t>(relative_inversions(canonical_orientation(x), u) % 2);
}

std::array<Bijection, 2> SimpsonModel::representatives(const LabeledSet& x) {
  const auto h = standard_chart(x);
  const auto fin = LabeledSet::fin(x.size());
  return {h, after(h, transposition(fin, Label(0), Label(1)))};
}

std::uint32_t SimpsonModel::project(const LabeledSet& x, const Bijection& f) {
  return sign_inversions(after(invert(standard_chart(x)), f)).to_fin2();
}

std::array<OrbitElement, 2> OrbitModel::representatives(const LabeledSet& x) {
  const auto h = standard_chart(x);
  return {OrbitElement{h, SignValue::plus()}, OrbitElement{h, SignValue::minus()}};
}

OrbitElement OrbitModel::act(const Permutation& alpha, const OrbitElement& b) {
  return {after(b.chart, invert(alpha)), sign_inversions(alpha) * b.sign};
}

std::uint32_t OrbitModel::project(const LabeledSet& x, const OrbitElement& b) {
  return (sign_inversions(after(invert(standard_chart(x)), b.chart)) * b.sign).to_fin2();
}

SignValue FixedPointElement::evaluate(const Bijection& h) const {
  return sign_inversions(after(invert(reference), h)) * value_at_reference;
}

std::vector<SignValue> FixedPointElement::table() const {
  std::vector<SignValue> out;
  for (const auto& h : enumerate_bijections(reference.domain(), reference.codomain()))
    out.push_back(evaluate(h));
  return out;
}

std::array<FixedPointElement, 2> FixedPointModel::representatives(const LabeledSet& x) {
  const auto h = standard_chart(x);
  return {FixedPointElement{h, SignValue::plus()}, FixedPointElement{h, SignValue::minus()}};
}

std::uint32_t FixedPointModel::project(const LabeledSet& x, const FixedPointElement& f) {
  return f.evaluate(standard_chart(x)).to_fin2();
}

// ---------------------------------------------------------------------------
// Families

namespace {

void require_arity(std::size_t n, std::size_t max, const char* name) {
  if (n < 2) {
    std::ostringstream msg;
    msg << name << " needs n >= 2, got " << n;
    throw Error(ErrorKind::ArityTooSmall, msg.str());
  }
  if (n > max) {
    std::ostringstream msg;
    msg << name << " supports n <= " << max << ", got " << n;
    throw Error(ErrorKind::SizeGuard, msg.str());
  }
}

/// The fiber over X is {0, 1}; e acts by sending class k to the class of the
/// transported k-th representative.
template <class Model>
TwoElementFamily quotient_family(std::string name, std::size_t n) {
  auto fiber = [](const LabeledSet&) { return LabeledSet::fin(2); };
  auto action = [name](const Bijection& e) {
    const auto reps = Model::representatives(e.domain());
    std::vector<std::uint32_t> table(2);
    for (std::size_t k = 0; k < 2; ++k)
      table[k] = Model::project(e.codomain(), Model::transport(e, reps[k]));
    if (table[0] == table[1])
      throw Error(ErrorKind::WrongCardinality, name + " action collapsed the two classes");
    return Bijection::from_indices(LabeledSet::fin(2), LabeledSet::fin(2), std::move(table));
  };
  return TwoElementFamily(std::move(name), n, fiber, action, Bijection::identity(sign_set()));
}

}  // namespace

TwoElementFamily cartier_delooping(std::size_t n) {
  require_arity(n, kMaxOrientationSize, "cartier");
  return quotient_family<CartierModel>("cartier", n);
}

TwoElementFamily simpson_delooping(std::size_t n) {
  require_arity(n, kEnumerationBound, "simpson");
  return quotient_family<SimpsonModel>("simpson", n);
}

TwoElementFamily orbit_delooping(std::size_t n) {
  require_arity(n, kEnumerationBound, "orbit");
  return quotient_family<OrbitModel>("orbit", n);
}

TwoElementFamily fixed_point_delooping(std::size_t n) {
  require_arity(n, SIZE_MAX, "fixed");
  return quotient_family<FixedPointModel>("fixed", n);
}

std::vector<TwoElementFamily> all_deloopings(std::size_t n) {
  return {fixed_point_delooping(n), orbit_delooping(n), simpson_delooping(n), cartier_delooping(n)};
}

// ---------------------------------------------------------------------------
// Explicit quotients

LabeledSet orientation_codes(const LabeledSet& x) {
  if (pair_count(x.size()) > 21)
    throw Error(ErrorKind::SizeGuard, "refusing to list more than 2^21 orientations");
  std::vector<Label> codes(full_mask(x.size()) + 1);
  for (std::size_t m = 0; m < codes.size(); ++m) codes[m] = Label(static_cast<std::uint32_t>(m));
  return LabeledSet::from_labels(std::move(codes));
}

Partition cartier_classes(const LabeledSet& x, Execution exec) {
  const auto codes = orientation_codes(x);
  // Codes are the orientation masks themselves, so m(u, v) = popcount(u ^ v).
  auto even = [](Label a, Label b) { return std::popcount(a.atom ^ b.atom) % 2 == 0; };
  return partition_from_relation(codes, even, exec);
}

Partition simpson_classes(const LabeledSet& x, Execution exec) {
  const auto fin = LabeledSet::fin(x.size());
  const auto maps = enumerate_bijections(fin, x);
  std::vector<Bijection> inverses;
  inverses.reserve(maps.size());
  for (const auto& f : maps) inverses.push_back(invert(f));
  auto related = [&](Label a, Label b) {
    return sign_inversions(after(inverses[b.atom], maps[a.atom])).is_plus();
  };
  return partition_from_relation(LabeledSet::fin(maps.size()), related, exec);
}

Partition orbit_classes(const LabeledSet& x) {
  const auto fin = LabeledSet::fin(x.size());
  const auto maps = enumerate_bijections(fin, x);
  const auto group = symmetric_group(x.size());
  const std::size_t count = 2 * maps.size();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> block(count, unset);
  std::uint32_t next = 0;
  for (std::size_t code = 0; code < count; ++code) {
    if (block[code] != unset) continue;
    const auto start = decode_orbit_element(x, Label(static_cast<std::uint32_t>(code)));
    for (const auto& alpha : group) {
      const auto moved = OrbitModel::act(alpha, start);
      const auto k = kernels::lex_rank(moved.chart.forward());
      block[2 * k + moved.sign.to_fin2()] = next;
    }
    ++next;
  }
  return Partition::from_block_indices(LabeledSet::fin(count), block);
}

OrbitElement decode_orbit_element(const LabeledSet& x, Label code) {
  // The k-th bijection in lexicographic order, via the factorial number system.
  const std::size_t n = x.size();
  std::size_t k = code.atom / 2;
  std::vector<std::size_t> digits(n);
  for (std::size_t i = 1; i <= n; ++i) {
    digits[n - i] = k % i;
    k /= i;
  }
  if (k != 0) throw Error(ErrorKind::NotMember, "orbit code out of range");
  std::vector<std::uint32_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> table;
  for (auto d : digits) {
    table.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return {Bijection::from_indices(LabeledSet::fin(n), x, std::move(table)),
          SignValue::from_fin2(code.atom % 2)};
}

// ---------------------------------------------------------------------------

std::vector<std::vector<SignValue>> exhaustive_fixed_points(std::size_t n, Execution exec) {
  if (n > 4) {
    std::ostringstream msg;
    msg << "exhaustive fixed points enumerate 2^(n!) tables; n = " << n << " exceeds 4";
    throw Error(ErrorKind::SizeGuard, msg.str());
  }
  const auto masks = exec == Execution::parallel ? kernels::parallel::fixed_point_tables(n)
                                                 : kernels::serial::fixed_point_tables(n);
  std::size_t order = 1;
  for (std::size_t i = 2; i <= n; ++i) order *= i;
  std::vector<std::vector<SignValue>> out;
  for (auto m : masks) {
    auto& table = out.emplace_back();
    for (std::size_t k = 0; k < order; ++k) table.push_back(SignValue::from_fin2((m >> k) & 1u));
  }
  return out;
}

std::vector<Permutation> alternating_kernel(std::size_t n) {
  require_arity(n, kEnumerationBound, "alternating_kernel");
  std::vector<Permutation> out;
  for (auto& e : symmetric_group(n))
    if (sign_inversions(e).is_plus()) out.push_back(std::move(e));
  return out;
}

}  // namespace deloop
