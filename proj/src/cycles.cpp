#include "deloop/cycles.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace deloop {

EndoFunction EndoFunction::from_bijection(const Bijection& e) {
  if (!e.is_endo()) throw Error(ErrorKind::DomainMismatch, "not an endo-bijection");
  return {e.domain(), std::vector<std::uint32_t>(e.forward().begin(), e.forward().end())};
}

EndoFunction EndoFunction::from_labels(LabeledSet carrier, std::span<const Label> images) {
  if (images.size() != carrier.size())
    throw Error(ErrorKind::DomainMismatch, "image table has the wrong length");
  std::vector<std::uint32_t> table;
  table.reserve(images.size());
  for (auto l : images) table.push_back(static_cast<std::uint32_t>(carrier.position(l)));
  return {std::move(carrier), std::move(table)};
}

bool is_cyclic(const LabeledSet& carrier, const EndoFunction& f) {
  if (!(f.carrier == carrier))
    throw Error(ErrorKind::CarrierMismatch, "function is not defined on this carrier");
  const std::size_t n = carrier.size();
  if (n == 0) return false;
  // From element 0, the first n iterates must all be distinct and return.
  std::vector<bool> seen(n, false);
  std::size_t x = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (seen[x]) return false;
    seen[x] = true;
    x = f.image[x];
  }
  return x == 0;
}

// ---------------------------------------------------------------------------
// Cyclic structures and cycle decompositions

CyclicStructure CyclicStructure::make(Bijection step) {
  if (!step.is_endo()) throw Error(ErrorKind::MalformedDecomposition, "cycle step is not an endomap");
  if (!is_cyclic(step.domain(), EndoFunction::from_bijection(step))) {
    std::ostringstream msg;
    msg << "step " << step << " does not have a single orbit";
    throw Error(ErrorKind::MalformedDecomposition, msg.str());
  }
  return CyclicStructure(std::move(step));
}

std::vector<Label> CyclicStructure::orbit() const {
  std::vector<Label> out;
  out.reserve(length());
  std::size_t i = 0;
  do {
    out.push_back(carrier()[i]);
    i = step_.image_index(i);
  } while (i != 0);
  return out;
}

namespace {

// Orbits of an index map, each listed from its smallest index, in order of
// smallest index.
std::vector<std::vector<std::size_t>> index_orbits(std::span<const std::uint32_t> table) {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(table.size(), false);
  for (std::size_t start = 0; start < table.size(); ++start) {
    if (seen[start]) continue;
    auto& orbit = orbits.emplace_back();
    for (std::size_t i = start; !seen[i]; i = table[i]) {
      seen[i] = true;
      orbit.push_back(i);
    }
  }
  return orbits;
}

CyclicStructure cycle_on(const std::vector<Label>& orbit) {
  auto carrier = LabeledSet::from_labels(orbit);
  std::vector<Label> images(carrier.size());
  for (std::size_t k = 0; k < orbit.size(); ++k)
    images[carrier.position(orbit[k])] = orbit[(k + 1) % orbit.size()];
  return CyclicStructure::make(Bijection::from_labels(carrier, carrier, images));
}

LabeledSet disjoint_union(std::vector<Label> labels) {
  try {
    return LabeledSet::from_labels(std::move(labels));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DuplicateLabel) throw;
    throw Error(ErrorKind::MalformedDecomposition, std::string("pieces overlap: ") + e.what());
  }
}

void require_glue(const Bijection& glue, const LabeledSet& target) {
  if (!(glue.codomain() == target)) {
    std::ostringstream msg;
    msg << "glue lands on " << glue.codomain() << ", expected " << target;
    throw Error(ErrorKind::MalformedDecomposition, msg.str());
  }
}

CycleForm normalize(CycleForm cycles) {
  for (auto& c : cycles) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace

Partition orbit_partition(const Bijection& e) {
  if (!e.is_endo()) throw Error(ErrorKind::DomainMismatch, "orbit_partition needs an endo-bijection");
  std::vector<std::uint32_t> block(e.size());
  auto orbits = index_orbits(e.forward());
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (auto i : orbits[k]) block[i] = static_cast<std::uint32_t>(k);
  return Partition::from_block_indices(e.domain(), block);
}

CycleDecomposition cycle_decompose(const Bijection& e) {
  if (!e.is_endo()) throw Error(ErrorKind::DomainMismatch, "cycle_decompose needs an endo-bijection");
  std::vector<CyclicStructure> cycles;
  for (const auto& orbit : index_orbits(e.forward())) {
    std::vector<Label> labels;
    labels.reserve(orbit.size());
    for (auto i : orbit) labels.push_back(e.domain()[i]);
    cycles.push_back(cycle_on(labels));
  }
  auto index = LabeledSet::fin(cycles.size());
  return {std::move(index), std::move(cycles), Bijection::identity(e.domain())};
}

Bijection recompose(const CycleDecomposition& dec) {
  if (dec.index.size() != dec.cycles.size())
    throw Error(ErrorKind::MalformedDecomposition, "index and cycle family differ in size");
  std::vector<Label> all;
  for (const auto& c : dec.cycles)
    all.insert(all.end(), c.carrier().elements().begin(), c.carrier().elements().end());
  auto sum = disjoint_union(std::move(all));
  require_glue(dec.glue, sum);

  // Step on the union, then conjugate by the glue.
  std::vector<std::uint32_t> step(sum.size());
  for (const auto& c : dec.cycles)
    for (std::size_t i = 0; i < c.length(); ++i)
      step[sum.position(c.carrier()[i])] =
          static_cast<std::uint32_t>(sum.position(c.carrier()[c.step().image_index(i)]));
  std::vector<std::uint32_t> table(sum.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = dec.glue.preimage_index(step[dec.glue.image_index(i)]);
  return Bijection::from_indices(dec.glue.domain(), dec.glue.domain(), std::move(table));
}

CycleForm canonical_form(const CycleDecomposition& dec) {
  CycleForm out;
  for (const auto& c : dec.cycles) {
    auto& orbit = out.emplace_back();
    for (auto l : c.orbit()) orbit.push_back(dec.glue.preimage(l));
  }
  return normalize(std::move(out));
}

// ---------------------------------------------------------------------------
// Endofunctions

std::size_t RootedTree::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

EndoDecomposition decompose_endofunction(const EndoFunction& f) {
  const auto& x = f.carrier;
  const std::size_t n = x.size();

  // The image of f^n is exactly the set of periodic points.
  std::vector<bool> periodic(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t y = i;
    for (std::size_t k = 0; k < n; ++k) y = f.image[y];
    periodic[y] = true;
  }

  std::vector<CyclicStructure> cycles;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (!periodic[start] || seen[start]) continue;
    std::vector<Label> orbit;
    for (std::size_t i = start; !seen[i]; i = f.image[i]) {
      seen[i] = true;
      orbit.push_back(x[i]);
    }
    cycles.push_back(cycle_on(orbit));
  }

  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!periodic[i]) children[f.image[i]].push_back(i);
  std::function<RootedTree(std::size_t)> grow = [&](std::size_t i) {
    RootedTree t{x[i], {}};
    for (auto c : children[i]) t.children.push_back(grow(c));
    return t;
  };
  std::vector<RootedTree> trees;
  for (std::size_t i = 0; i < n; ++i)
    if (periodic[i]) trees.push_back(grow(i));

  return {std::move(cycles), std::move(trees), Bijection::identity(x)};
}

EndoFunction recompose_endofunction(const EndoDecomposition& dec) {
  std::vector<Label> roots;
  for (const auto& c : dec.cycles)
    roots.insert(roots.end(), c.carrier().elements().begin(), c.carrier().elements().end());
  auto root_set = disjoint_union(roots);

  std::vector<Label> nodes;
  std::vector<Label> tree_roots;
  std::vector<std::pair<Label, Label>> parent;  // (child, parent)
  std::function<void(const RootedTree&)> walk = [&](const RootedTree& t) {
    nodes.push_back(t.root);
    for (const auto& c : t.children) {
      parent.emplace_back(c.root, t.root);
      walk(c);
    }
  };
  for (const auto& t : dec.trees) {
    tree_roots.push_back(t.root);
    walk(t);
  }
  if (!(disjoint_union(tree_roots) == root_set))
    throw Error(ErrorKind::MalformedDecomposition, "tree roots differ from the cycle elements");
  auto node_set = disjoint_union(std::move(nodes));
  require_glue(dec.glue, node_set);

  std::vector<std::uint32_t> step(node_set.size());
  for (const auto& c : dec.cycles)
    for (std::size_t i = 0; i < c.length(); ++i)
      step[node_set.position(c.carrier()[i])] =
          static_cast<std::uint32_t>(node_set.position(c.carrier()[c.step().image_index(i)]));
  for (auto [child, up] : parent)
    step[node_set.position(child)] = static_cast<std::uint32_t>(node_set.position(up));

  const auto& x = dec.glue.domain();
  std::vector<std::uint32_t> table(x.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = dec.glue.preimage_index(step[dec.glue.image_index(i)]);
  return {x, std::move(table)};
}

EndoForm canonical_form(const EndoDecomposition& dec) {
  EndoForm out;
  for (const auto& c : dec.cycles) {
    auto& orbit = out.cycles.emplace_back();
    for (auto l : c.orbit()) orbit.push_back(dec.glue.preimage(l));
  }
  out.cycles = normalize(std::move(out.cycles));
  std::function<RootedTree(const RootedTree&)> pull = [&](const RootedTree& t) {
    RootedTree r{dec.glue.preimage(t.root), {}};
    for (const auto& c : t.children) r.children.push_back(pull(c));
    std::sort(r.children.begin(), r.children.end(),
              [](const RootedTree& a, const RootedTree& b) { return a.root < b.root; });
    return r;
  };
  for (const auto& t : dec.trees) out.trees.push_back(pull(t));
  std::sort(out.trees.begin(), out.trees.end(),
            [](const RootedTree& a, const RootedTree& b) { return a.root < b.root; });
  return out;
}

}  // namespace deloop
