#include "deloop/permutation.hpp"

#include <ostream>

#include "deloop/cycles.hpp"

namespace deloop {

std::ostream& operator<<(std::ostream& os, SignValue s) { return os << (s.is_plus() ? "+1" : "-1"); }

namespace {

void require_endo(const Bijection& e, const char* what) {
  if (!e.is_endo()) throw Error(ErrorKind::DomainMismatch, std::string(what) + " needs an endo-bijection");
}

}  // namespace

std::vector<InversionPair> inversions(const Bijection& e) {
  require_endo(e, "inversions");
  std::vector<InversionPair> out;
  const auto& x = e.domain();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e.image_index(i) > e.image_index(j)) out.push_back({x[i], x[j]});
  return out;
}

std::size_t inversion_count(const Bijection& e) {
  require_endo(e, "inversion_count");
  std::size_t count = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      count += e.image_index(i) > e.image_index(j);
  return count;
}

SignValue sign_inversions(const Bijection& e) { return SignValue::from_parity(inversion_count(e)); }

Permutation succ_cycle(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::ZeroModulus, "there is no cycle of order 0");
  std::vector<std::uint32_t> images(k);
  for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<std::uint32_t>((i + 1) % k);
  return Bijection::permutation(std::move(images));
}

TranspositionList factor_into_transpositions(const Bijection& e) {
  require_endo(e, "factor_into_transpositions");
  TranspositionList out;
  for (const auto& cycle : canonical_form(cycle_decompose(e)))
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      out.push_back(Subset::of(e.domain(), {cycle[i], cycle[i + 1]}));
  return out;
}

Bijection product(const LabeledSet& x, const TranspositionList& factors) {
  auto result = Bijection::identity(x);
  for (const auto& t : factors) result = after(result, transposition_of_pair(x, t));
  return result;
}

}  // namespace deloop
