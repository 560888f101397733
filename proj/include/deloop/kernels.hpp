#pragma once

// Exhaustive verification kernels. Each kernel has a serial reference,
// written directly against the library operations, and an OpenMP version
// working on raw masks and index tables. Tests hold the two to identical
// results; bench/ compares their speed.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "deloop/family.hpp"

namespace deloop::kernels {

/// Three orientation masks of Fin n.
using Triple = std::array<std::uint64_t, 3>;

/// `count` uniformly random triples of orientations of Fin n.
std::vector<Triple> random_triples(std::size_t n, std::size_t count, std::uint64_t seed);

/// Index of the permutation `images` of Fin n in lexicographic order.
std::size_t lex_rank(std::span<const std::uint32_t> images);

namespace serial {

/// Triples violating m(u1,u3) = m(u1,u2) + m(u2,u3) mod 2.
std::size_t triangle_violations(std::size_t n, std::span<const Triple> triples);
/// Same over all (2^C(n,2))^3 triples.
std::size_t triangle_violations_exhaustive(std::size_t n);

/// Every table S_n -> {+1,-1}, as a bitmask (bit k set iff the k-th
/// permutation maps to -1), fixed by every alpha in S_n.
std::vector<std::uint64_t> fixed_point_tables(std::size_t n);

/// Permutations of Fin arity() where sign_from_delooping and sign_inversions differ.
std::size_t sign_disagreements(const TwoElementFamily& q);

/// Sizes of the two parity classes of orientations of Fin n relative to
/// the canonical orientation.
std::array<std::uint64_t, 2> cartier_class_sizes(std::size_t n);

}  // namespace serial

namespace parallel {

std::size_t triangle_violations(std::size_t n, std::span<const Triple> triples);
std::size_t triangle_violations_exhaustive(std::size_t n);
/// Checks only the adjacent transpositions, which generate S_n.
std::vector<std::uint64_t> fixed_point_tables(std::size_t n);
std::size_t sign_disagreements(const TwoElementFamily& q);
std::array<std::uint64_t, 2> cartier_class_sizes(std::size_t n);

}  // namespace parallel

}  // namespace deloop::kernels
