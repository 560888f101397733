#pragma once

// Text forms of permutations of Fin n.
//
//   cycle notation     "(0 1 2)(3 4)"   fixed points may be omitted; "()" is
//                                       the identity
//   one-line notation  "1,2,0,4,3"      the image vector
//
// Parsing throws Error(ParseError).

#include <optional>
#include <string>
#include <string_view>

#include "deloop/finite_core.hpp"
#include "deloop/permutation.hpp"

namespace deloop {

/// Reads either notation. In cycle notation the size is `n` when given and
/// otherwise one more than the largest label mentioned. A one-line form
/// must have exactly `n` entries when `n` is given.
Permutation parse_permutation(std::string_view text, std::optional<std::size_t> n = std::nullopt);

/// Cycle notation with fixed points omitted; "()" for the identity.
std::string format_cycles(const Permutation& e);
std::string format_one_line(const Permutation& e);
/// "(0 1)(1 2)" in product order.
std::string format_transpositions(const TranspositionList& factors);

}  // namespace deloop
