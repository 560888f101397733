#include <algorithm>
#include <bit>

#include "deloop/kernels.hpp"
#include "deloop/orientation.hpp"

namespace deloop::kernels::parallel {

namespace {

inline bool triangle_holds(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  const auto m13 = std::popcount(a ^ c);
  const auto m12 = std::popcount(a ^ b);
  const auto m23 = std::popcount(b ^ c);
  return ((m13 ^ (m12 + m23)) & 1) == 0;
}

}  // namespace

std::size_t triangle_violations(std::size_t n, std::span<const Triple> triples) {
  (void)n;
  std::size_t bad = 0;
  const auto count = static_cast<std::int64_t>(triples.size());
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& t = triples[static_cast<std::size_t>(i)];
    bad += !triangle_holds(t[0], t[1], t[2]);
  }
  return bad;
}

std::size_t triangle_violations_exhaustive(std::size_t n) {
  const auto count = static_cast<std::int64_t>(full_mask(n) + 1);
  std::size_t bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (std::int64_t a = 0; a < count; ++a)
    for (std::int64_t b = 0; b < count; ++b)
      for (std::int64_t c = 0; c < count; ++c)
        bad += !triangle_holds(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                               static_cast<std::uint64_t>(c));
  return bad;
}

std::vector<std::uint64_t> fixed_point_tables(std::size_t n) {
  if (n > 4) throw Error(ErrorKind::SizeGuard, "fixed-point tables need n <= 4");
  const auto group = symmetric_group(n);
  const std::size_t order = group.size();
  const auto fin = LabeledSet::fin(n);
  // Adjacent transpositions are odd involutions, so alpha^-1 = alpha.
  std::vector<std::vector<std::uint32_t>> moved;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto alpha = transposition(fin, Label(static_cast<std::uint32_t>(i)),
                                     Label(static_cast<std::uint32_t>(i + 1)));
    auto& row = moved.emplace_back(order);
    for (std::size_t k = 0; k < order; ++k)
      row[k] = static_cast<std::uint32_t>(lex_rank(after(group[k], alpha).forward()));
  }

  const auto tables = static_cast<std::int64_t>(std::uint64_t{1} << order);
  std::vector<std::uint64_t> fixed;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t ti = 0; ti < tables; ++ti) {
      const auto t = static_cast<std::uint64_t>(ti);
      bool ok = true;
      for (std::size_t g = 0; g < moved.size() && ok; ++g)
        for (std::size_t k = 0; k < order && ok; ++k)
          ok = (((t >> moved[g][k]) ^ (t >> k)) & 1u) == 1u;
      if (ok) local.push_back(t);
    }
#pragma omp critical
    fixed.insert(fixed.end(), local.begin(), local.end());
  }
  std::sort(fixed.begin(), fixed.end());
  return fixed;
}

std::size_t sign_disagreements(const TwoElementFamily& q) {
  const auto group = symmetric_group(q.arity());
  const auto count = static_cast<std::int64_t>(group.size());
  std::size_t bad = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : bad)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& e = group[static_cast<std::size_t>(i)];
    bad += sign_from_delooping(q, e) != sign_inversions(e);
  }
  return bad;
}

std::array<std::uint64_t, 2> cartier_class_sizes(std::size_t n) {
  const std::uint64_t d = full_mask(n);
  const auto count = static_cast<std::int64_t>(d + 1);
  std::uint64_t odd = 0;
#pragma omp parallel for schedule(static) reduction(+ : odd)
  for (std::int64_t m = 0; m < count; ++m) odd += std::popcount(d ^ static_cast<std::uint64_t>(m)) & 1;
  return {static_cast<std::uint64_t>(count) - odd, odd};
}

}  // namespace deloop::kernels::parallel
