#pragma once

// Concrete finite sets, bijections between them and decidable subsets.
//
// A LabeledSet is a strictly sorted sequence of opaque labels. A Bijection
// stores its forward and backward maps as index tables into the domain and
// codomain, so composition and inversion never touch the labels themselves.
//
// Composition convention: compose(e, f) applies e first, then f, so
// compose(e, f) == after(f, e) == f o e.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "deloop/error.hpp"

namespace deloop {

struct Label {
  std::uint32_t atom = 0;

  constexpr Label() = default;
  constexpr explicit Label(std::uint32_t a) : atom(a) {}

  friend constexpr auto operator<=>(Label, Label) = default;
};

std::ostream& operator<<(std::ostream& os, Label l);

/// Largest set for which enumerate_bijections will materialize all n! maps.
inline constexpr std::size_t kEnumerationBound = 8;

class LabeledSet {
 public:
  LabeledSet();

  /// Sorts the labels; throws DuplicateLabel if any label repeats.
  static LabeledSet from_labels(std::vector<Label> labels);
  /// The canonical set {0, ..., n-1}.
  static LabeledSet fin(std::size_t n);

  std::size_t size() const { return labels_->size(); }
  bool empty() const { return labels_->empty(); }
  std::span<const Label> elements() const { return *labels_; }
  Label operator[](std::size_t i) const { return (*labels_)[i]; }

  std::optional<std::size_t> index_of(Label l) const;
  /// Like index_of but throws NotMember.
  std::size_t position(Label l) const;
  bool contains(Label l) const { return index_of(l).has_value(); }

  bool is_fin() const;

  friend bool operator==(const LabeledSet& a, const LabeledSet& b);

 private:
  explicit LabeledSet(std::shared_ptr<const std::vector<Label>> labels)
      : labels_(std::move(labels)) {}

  std::shared_ptr<const std::vector<Label>> labels_;
};

std::ostream& operator<<(std::ostream& os, const LabeledSet& s);

class Bijection {
 public:
  /// forward[i] is the codomain index of the image of domain()[i].
  static Bijection from_indices(LabeledSet domain, LabeledSet codomain,
                                std::vector<std::uint32_t> forward);
  /// images[i] is the codomain label assigned to domain()[i].
  static Bijection from_labels(LabeledSet domain, LabeledSet codomain,
                               std::span<const Label> images);
  static Bijection identity(const LabeledSet& s);
  /// Permutation of Fin n given by its image vector.
  static Bijection permutation(std::vector<std::uint32_t> images);

  const LabeledSet& domain() const { return domain_; }
  const LabeledSet& codomain() const { return codomain_; }
  std::size_t size() const { return forward_.size(); }

  Label operator()(Label x) const;
  Label preimage(Label y) const;

  std::uint32_t image_index(std::size_t i) const { return forward_[i]; }
  std::uint32_t preimage_index(std::size_t j) const { return backward_[j]; }
  std::span<const std::uint32_t> forward() const { return forward_; }
  std::span<const std::uint32_t> backward() const { return backward_; }

  bool is_endo() const { return domain_ == codomain_; }
  bool is_identity() const;

  friend bool operator==(const Bijection& a, const Bijection& b);

 private:
  Bijection(LabeledSet domain, LabeledSet codomain, std::vector<std::uint32_t> forward,
            std::vector<std::uint32_t> backward)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        forward_(std::move(forward)),
        backward_(std::move(backward)) {}

  LabeledSet domain_;
  LabeledSet codomain_;
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> backward_;
};

/// A bijection whose domain and codomain are both Fin n.
using Permutation = Bijection;

std::ostream& operator<<(std::ostream& os, const Bijection& e);

/// Applies e, then f. Throws DomainMismatch unless e.codomain() == f.domain().
Bijection compose(const Bijection& e, const Bijection& f);
/// f o e, i.e. compose(e, f).
inline Bijection after(const Bijection& f, const Bijection& e) { return compose(e, f); }
Bijection invert(const Bijection& e);

/// All bijections A -> B in lexicographic order of their image sequences.
/// Empty when |A| != |B|; throws SizeGuard when |A| > bound.
std::vector<Bijection> enumerate_bijections(const LabeledSet& a, const LabeledSet& b,
                                            std::size_t bound = kEnumerationBound);
/// All permutations of Fin n, lexicographic.
std::vector<Permutation> symmetric_group(std::size_t n, std::size_t bound = kEnumerationBound);

class Subset {
 public:
  /// Throws NotSubset if a member is missing from the carrier.
  static Subset of(LabeledSet carrier, std::vector<Label> members);

  const LabeledSet& carrier() const { return carrier_; }
  const LabeledSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Label l) const { return members_.contains(l); }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.carrier_ == b.carrier_ && a.members_ == b.members_;
  }

 private:
  Subset(LabeledSet carrier, LabeledSet members)
      : carrier_(std::move(carrier)), members_(std::move(members)) {}

  LabeledSet carrier_;
  LabeledSet members_;
};

/// All k-element subsets of x in lexicographic order; empty when k > |x|.
std::vector<Subset> k_subsets(const LabeledSet& x, std::size_t k);

/// The fixed-point-free involution on a 2-element set.
Bijection swap_two(const LabeledSet& t);

/// Labels moved by an endo-bijection.
Subset support(const Bijection& e);

/// The transposition of x exchanging the two members of p.
Bijection transposition_of_pair(const LabeledSet& x, const Subset& p);
/// Convenience: transposition <a b> on x.
Bijection transposition(const LabeledSet& x, Label a, Label b);

/// x with the label removed. Throws NotMember.
LabeledSet puncture(const LabeledSet& x, Label removed);

/// y plus a fresh label (max + 1, or 0 when y is empty).
std::pair<LabeledSet, Label> extend(const LabeledSet& y);

}  // namespace deloop
