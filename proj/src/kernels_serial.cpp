#include <random>

#include "deloop/kernels.hpp"
#include "deloop/orientation.hpp"

namespace deloop::kernels {

std::vector<Triple> random_triples(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> mask(0, full_mask(n));
  std::vector<Triple> out(count);
  for (auto& t : out) t = {mask(rng), mask(rng), mask(rng)};
  return out;
}

std::size_t lex_rank(std::span<const std::uint32_t> images) {
  // Lehmer code read in the factorial number system.
  std::size_t rank = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < images.size(); ++j) smaller += images[j] < images[i];
    rank = rank * (images.size() - i) + smaller;
  }
  return rank;
}

namespace serial {

std::size_t triangle_violations(std::size_t n, std::span<const Triple> triples) {
  const auto fin = LabeledSet::fin(n);
  std::size_t bad = 0;
  for (const auto& [a, b, c] : triples) {
    auto u1 = Orientation::from_bits(fin, a);
    auto u2 = Orientation::from_bits(fin, b);
    auto u3 = Orientation::from_bits(fin, c);
    auto lhs = relative_inversions(u1, u3);
    auto rhs = relative_inversions(u1, u2) + relative_inversions(u2, u3);
    bad += (lhs % 2) != (rhs % 2);
  }
  return bad;
}

std::size_t triangle_violations_exhaustive(std::size_t n) {
  const auto fin = LabeledSet::fin(n);
  const std::uint64_t count = full_mask(n) + 1;
  std::vector<Orientation> all;
  all.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) all.push_back(Orientation::from_bits(fin, m));
  std::size_t bad = 0;
  for (const auto& u1 : all)
    for (const auto& u2 : all) {
      const auto m12 = relative_inversions(u1, u2);
      for (const auto& u3 : all)
        bad += (relative_inversions(u1, u3) % 2) != ((m12 + relative_inversions(u2, u3)) % 2);
    }
  return bad;
}

std::vector<std::uint64_t> fixed_point_tables(std::size_t n) {
  if (n > 4) throw Error(ErrorKind::SizeGuard, "fixed-point tables need n <= 4");
  const auto group = symmetric_group(n);
  const std::size_t order = group.size();
  // moved[a][k]: rank of group[k] o alpha^-1 for alpha = group[a].
  std::vector<std::vector<std::size_t>> moved(order, std::vector<std::size_t>(order));
  std::vector<bool> odd(order);
  for (std::size_t a = 0; a < order; ++a) {
    odd[a] = !sign_inversions(group[a]).is_plus();
    const auto inv = invert(group[a]);
    for (std::size_t k = 0; k < order; ++k) moved[a][k] = lex_rank(after(group[k], inv).forward());
  }
  std::vector<std::uint64_t> fixed;
  const std::uint64_t tables = std::uint64_t{1} << order;
  for (std::uint64_t t = 0; t < tables; ++t) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a)
      for (std::size_t k = 0; k < order && ok; ++k) {
        const bool value = (t >> moved[a][k]) & 1u;
        ok = (value != odd[a]) == static_cast<bool>((t >> k) & 1u);
      }
    if (ok) fixed.push_back(t);
  }
  return fixed;
}

std::size_t sign_disagreements(const TwoElementFamily& q) {
  std::size_t bad = 0;
  for (const auto& e : symmetric_group(q.arity())) bad += sign_from_delooping(q, e) != sign_inversions(e);
  return bad;
}

std::array<std::uint64_t, 2> cartier_class_sizes(std::size_t n) {
  const auto fin = LabeledSet::fin(n);
  const auto d = canonical_orientation(fin);
  std::array<std::uint64_t, 2> sizes{0, 0};
  for (std::uint64_t m = 0; m <= full_mask(n); ++m)
    ++sizes[relative_inversions(d, Orientation::from_bits(fin, m)) % 2];
  return sizes;
}

}  // namespace serial
}  // namespace deloop::kernels
