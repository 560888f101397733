#pragma once

// Cyclic structures, the correspondence between permutations and cycle
// decompositions, and the decomposition of an arbitrary endofunction into
// cycles with rooted trees hanging off each cycle element.
//
// Canonical form: cycles sorted by minimal carrier label, each orbit listed
// from its minimal label, glue equal to the identity pairing on labels.

#include <cstdint>
#include <vector>

#include "deloop/finite_core.hpp"
#include "deloop/quotients.hpp"

namespace deloop {

/// A total function carrier -> carrier, stored as an index table.
struct EndoFunction {
  LabeledSet carrier;
  std::vector<std::uint32_t> image;

  static EndoFunction from_bijection(const Bijection& e);
  static EndoFunction from_labels(LabeledSet carrier, std::span<const Label> images);

  Label operator()(Label x) const { return carrier[image[carrier.position(x)]]; }
  friend bool operator==(const EndoFunction&, const EndoFunction&) = default;
};

/// True iff every y is reachable from every x by iterating f. False for the
/// empty carrier.
bool is_cyclic(const LabeledSet& carrier, const EndoFunction& f);

class CyclicStructure {
 public:
  /// Throws MalformedDecomposition unless `step` is an endo-bijection with a
  /// single orbit on a nonempty carrier.
  static CyclicStructure make(Bijection step);

  const LabeledSet& carrier() const { return step_.domain(); }
  const Bijection& step() const { return step_; }
  std::size_t length() const { return step_.size(); }
  /// The orbit starting at the minimal label.
  std::vector<Label> orbit() const;

 private:
  explicit CyclicStructure(Bijection step) : step_(std::move(step)) {}
  Bijection step_;
};

struct CycleDecomposition {
  LabeledSet index;  // Fin m, one label per cycle
  std::vector<CyclicStructure> cycles;
  Bijection glue;  // X -> disjoint union of the cycle carriers
};

/// Each cycle's orbit, as listed by CyclicStructure::orbit, after pulling
/// back through the glue; cycles sorted by minimal label. Fixed points are
/// kept as 1-cycles.
using CycleForm = std::vector<std::vector<Label>>;

Partition orbit_partition(const Bijection& e);
CycleDecomposition cycle_decompose(const Bijection& e);
/// Throws MalformedDecomposition if cycle carriers overlap or the glue does
/// not land on their union.
Bijection recompose(const CycleDecomposition& dec);
CycleForm canonical_form(const CycleDecomposition& dec);

struct RootedTree {
  Label root;
  std::vector<RootedTree> children;  // sorted by root label

  std::size_t node_count() const;
  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

struct EndoDecomposition {
  std::vector<CyclicStructure> cycles;
  /// One tree per cycle element, sorted by root label.
  std::vector<RootedTree> trees;
  Bijection glue;  // X -> set of all tree nodes
};

EndoDecomposition decompose_endofunction(const EndoFunction& f);
/// Throws MalformedDecomposition if the trees and cycles do not fit together.
EndoFunction recompose_endofunction(const EndoDecomposition& dec);

/// Cycles, trees and glue with every label pulled back through the glue,
/// children and cycles sorted; equal exactly for equivalent decompositions.
struct EndoForm {
  CycleForm cycles;
  std::vector<RootedTree> trees;
  friend bool operator==(const EndoForm&, const EndoForm&) = default;
};
EndoForm canonical_form(const EndoDecomposition& dec);

}  // namespace deloop
