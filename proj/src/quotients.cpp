#include "deloop/quotients.hpp"

#include <numeric>

namespace deloop {

namespace detail {

void throw_relation_error(ErrorKind kind, std::vector<Label> witness) {
  std::ostringstream msg;
  msg << "witness (";
  for (std::size_t i = 0; i < witness.size(); ++i) msg << (i ? ", " : "") << witness[i];
  msg << ')';
  throw RelationError(kind, std::move(witness), msg.str());
}

}  // namespace detail

Partition Partition::from_block_indices(LabeledSet carrier,
                                        std::span<const std::uint32_t> block_index) {
  if (block_index.size() != carrier.size())
    throw Error(ErrorKind::MalformedPartition, "block index table has the wrong length");
  // Renumber blocks in order of first appearance, which is order of minimum.
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> renumber;
  std::vector<std::uint32_t> index(carrier.size());
  std::vector<std::vector<Label>> members;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    auto b = block_index[i];
    if (b >= renumber.size()) renumber.resize(b + 1, unset);
    if (renumber[b] == unset) {
      renumber[b] = static_cast<std::uint32_t>(members.size());
      members.emplace_back();
    }
    index[i] = renumber[b];
    members[index[i]].push_back(carrier[i]);
  }
  std::vector<Subset> blocks;
  blocks.reserve(members.size());
  for (auto& m : members) blocks.push_back(Subset::of(carrier, std::move(m)));
  return Partition(std::move(carrier), std::move(blocks), std::move(index));
}

Partition Partition::from_blocks(LabeledSet carrier, std::vector<std::vector<Label>> blocks) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(carrier.size(), unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::MalformedPartition, "empty block");
    for (auto l : blocks[b]) {
      auto i = carrier.index_of(l);
      if (!i) {
        std::ostringstream msg;
        msg << "label " << l << " is not in the carrier";
        throw Error(ErrorKind::MalformedPartition, msg.str());
      }
      if (index[*i] != unset) {
        std::ostringstream msg;
        msg << "label " << l << " lies in two blocks";
        throw Error(ErrorKind::MalformedPartition, msg.str());
      }
      index[*i] = static_cast<std::uint32_t>(b);
    }
  }
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] == unset) {
      std::ostringstream msg;
      msg << "label " << carrier[i] << " is not covered";
      throw Error(ErrorKind::MalformedPartition, msg.str());
    }
  }
  return from_block_indices(std::move(carrier), index);
}

QuotientSet quotient(const Partition& p) {
  std::vector<Label> minima;
  minima.reserve(p.block_count());
  for (const auto& b : p.blocks()) minima.push_back(b.members()[0]);
  // Blocks are ordered by minimum, so class k of the sorted set is block k.
  auto classes = LabeledSet::from_labels(std::move(minima));
  std::vector<std::uint32_t> projection(p.carrier().size());
  for (std::size_t i = 0; i < projection.size(); ++i)
    projection[i] = static_cast<std::uint32_t>(p.block_of_index(i));
  return QuotientSet(p.carrier(), std::move(classes), std::move(projection));
}

std::pair<std::size_t, std::size_t> SigmaDecomposition::locate(Label summand) const {
  std::size_t offset = total.position(summand);
  for (std::size_t k = 0; k < fibers.size(); ++k) {
    if (offset < fibers[k].size()) return {k, offset};
    offset -= fibers[k].size();
  }
  throw Error(ErrorKind::MalformedDecomposition, "summand outside every fiber");
}

SigmaDecomposition sigma_decomposition(const Partition& p) {
  auto q = quotient(p);
  std::vector<LabeledSet> fibers;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& b : p.blocks()) {
    fibers.push_back(b.members());
    offsets.push_back(total);
    total += b.size();
  }
  const auto& carrier = p.carrier();
  std::vector<std::uint32_t> glue(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    auto k = p.block_of_index(i);
    glue[i] = static_cast<std::uint32_t>(offsets[k] + fibers[k].position(carrier[i]));
  }
  auto sum = LabeledSet::fin(total);
  return SigmaDecomposition{q.classes(), std::move(fibers), sum,
                            Bijection::from_indices(carrier, sum, std::move(glue))};
}

Partition partition_of(const SigmaDecomposition& s) {
  const auto& carrier = s.glue.domain();
  std::vector<std::uint32_t> block(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i)
    block[i] = static_cast<std::uint32_t>(s.locate(s.glue(carrier[i])).first);
  return Partition::from_block_indices(carrier, block);
}

}  // namespace deloop
