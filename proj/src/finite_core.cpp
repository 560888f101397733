#include "deloop/finite_core.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>

namespace deloop {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::WrongCardinality: return "WrongCardinality";
    case ErrorKind::NotSubset: return "NotSubset";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ZeroModulus: return "ZeroModulus";
    case ErrorKind::MalformedDecomposition: return "MalformedDecomposition";
    case ErrorKind::MalformedPartition: return "MalformedPartition";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::ArityTooSmall: return "ArityTooSmall";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotADelooping: return "NotADelooping";
    case ErrorKind::NaturalityFailure: return "NaturalityFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, Label l) { return os << l.atom; }

// ---------------------------------------------------------------------------
// LabeledSet

namespace {

const std::shared_ptr<const std::vector<Label>>& empty_labels() {
  static const auto empty = std::make_shared<const std::vector<Label>>();
  return empty;
}

}  // namespace

LabeledSet::LabeledSet() : labels_(empty_labels()) {}

LabeledSet LabeledSet::from_labels(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) {
    std::ostringstream msg;
    msg << "label " << *dup << " appears twice";
    throw Error(ErrorKind::DuplicateLabel, msg.str());
  }
  return LabeledSet(std::make_shared<const std::vector<Label>>(std::move(labels)));
}

LabeledSet LabeledSet::fin(std::size_t n) {
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = Label(static_cast<std::uint32_t>(i));
  return LabeledSet(std::make_shared<const std::vector<Label>>(std::move(labels)));
}

std::optional<std::size_t> LabeledSet::index_of(Label l) const {
  auto it = std::lower_bound(labels_->begin(), labels_->end(), l);
  if (it == labels_->end() || *it != l) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

std::size_t LabeledSet::position(Label l) const {
  if (auto i = index_of(l)) return *i;
  std::ostringstream msg;
  msg << "label " << l << " is not in " << *this;
  throw Error(ErrorKind::NotMember, msg.str());
}

bool LabeledSet::is_fin() const {
  for (std::size_t i = 0; i < size(); ++i)
    if ((*labels_)[i].atom != i) return false;
  return true;
}

bool operator==(const LabeledSet& a, const LabeledSet& b) {
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

std::ostream& operator<<(std::ostream& os, const LabeledSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << '}';
}

// ---------------------------------------------------------------------------
// Bijection

Bijection Bijection::from_indices(LabeledSet domain, LabeledSet codomain,
                                  std::vector<std::uint32_t> forward) {
  if (domain.size() != codomain.size() || forward.size() != domain.size()) {
    std::ostringstream msg;
    msg << "sizes " << domain.size() << ", " << codomain.size() << " and table " << forward.size();
    throw Error(ErrorKind::DomainMismatch, msg.str());
  }
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> backward(forward.size(), unset);
  for (std::size_t i = 0; i < forward.size(); ++i) {
    auto j = forward[i];
    if (j >= forward.size() || backward[j] != unset)
      throw Error(ErrorKind::DomainMismatch, "forward table is not a bijection");
    backward[j] = static_cast<std::uint32_t>(i);
  }
  return Bijection(std::move(domain), std::move(codomain), std::move(forward),
                   std::move(backward));
}

Bijection Bijection::from_labels(LabeledSet domain, LabeledSet codomain,
                                 std::span<const Label> images) {
  std::vector<std::uint32_t> forward;
  forward.reserve(images.size());
  for (auto l : images) forward.push_back(static_cast<std::uint32_t>(codomain.position(l)));
  return from_indices(std::move(domain), std::move(codomain), std::move(forward));
}

Bijection Bijection::identity(const LabeledSet& s) {
  std::vector<std::uint32_t> table(s.size());
  std::iota(table.begin(), table.end(), 0u);
  return Bijection(s, s, table, table);
}

Bijection Bijection::permutation(std::vector<std::uint32_t> images) {
  auto fin = LabeledSet::fin(images.size());
  return from_indices(fin, fin, std::move(images));
}

Label Bijection::operator()(Label x) const { return codomain_[forward_[domain_.position(x)]]; }

Label Bijection::preimage(Label y) const { return domain_[backward_[codomain_.position(y)]]; }

bool Bijection::is_identity() const {
  if (!is_endo()) return false;
  for (std::size_t i = 0; i < forward_.size(); ++i)
    if (forward_[i] != i) return false;
  return true;
}

bool operator==(const Bijection& a, const Bijection& b) {
  return a.forward_ == b.forward_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
}

std::ostream& operator<<(std::ostream& os, const Bijection& e) {
  os << '[';
  for (std::size_t i = 0; i < e.size(); ++i)
    os << (i ? " " : "") << e.domain()[i] << "->" << e.codomain()[e.image_index(i)];
  return os << ']';
}

Bijection compose(const Bijection& e, const Bijection& f) {
  if (!(e.codomain() == f.domain())) {
    std::ostringstream msg;
    msg << "codomain " << e.codomain() << " does not match domain " << f.domain();
    throw Error(ErrorKind::DomainMismatch, msg.str());
  }
  std::vector<std::uint32_t> table(e.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = f.image_index(e.image_index(i));
  return Bijection::from_indices(e.domain(), f.codomain(), std::move(table));
}

Bijection invert(const Bijection& e) {
  std::vector<std::uint32_t> table(e.backward().begin(), e.backward().end());
  return Bijection::from_indices(e.codomain(), e.domain(), std::move(table));
}

std::vector<Bijection> enumerate_bijections(const LabeledSet& a, const LabeledSet& b,
                                            std::size_t bound) {
  if (a.size() != b.size()) return {};
  if (a.size() > bound) {
    std::ostringstream msg;
    msg << "refusing to enumerate " << a.size() << "! bijections (bound " << bound << ")";
    throw Error(ErrorKind::SizeGuard, msg.str());
  }
  std::vector<std::uint32_t> table(a.size());
  std::iota(table.begin(), table.end(), 0u);
  std::vector<Bijection> out;
  do {
    out.push_back(Bijection::from_indices(a, b, table));
  } while (std::next_permutation(table.begin(), table.end()));
  return out;
}

std::vector<Permutation> symmetric_group(std::size_t n, std::size_t bound) {
  auto fin = LabeledSet::fin(n);
  return enumerate_bijections(fin, fin, bound);
}

// ---------------------------------------------------------------------------
// Subsets and elementary constructions

Subset Subset::of(LabeledSet carrier, std::vector<Label> members) {
  for (auto l : members) {
    if (!carrier.contains(l)) {
      std::ostringstream msg;
      msg << "label " << l << " is not in " << carrier;
      throw Error(ErrorKind::NotSubset, msg.str());
    }
  }
  auto m = LabeledSet::from_labels(std::move(members));
  return Subset(std::move(carrier), std::move(m));
}

std::vector<Subset> k_subsets(const LabeledSet& x, std::size_t k) {
  std::vector<Subset> out;
  const std::size_t n = x.size();
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    std::vector<Label> members;
    members.reserve(k);
    for (auto i : idx) members.push_back(x[i]);
    out.push_back(Subset::of(x, std::move(members)));
    // Advance to the next combination in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Bijection swap_two(const LabeledSet& t) {
  if (t.size() != 2) {
    std::ostringstream msg;
    msg << "swap needs a 2-element set, got " << t;
    throw Error(ErrorKind::WrongCardinality, msg.str());
  }
  return Bijection::from_indices(t, t, {1, 0});
}

Subset support(const Bijection& e) {
  if (!e.is_endo()) throw Error(ErrorKind::DomainMismatch, "support needs an endo-bijection");
  std::vector<Label> moved;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e.image_index(i) != i) moved.push_back(e.domain()[i]);
  return Subset::of(e.domain(), std::move(moved));
}

Bijection transposition_of_pair(const LabeledSet& x, const Subset& p) {
  if (p.size() != 2) {
    std::ostringstream msg;
    msg << "transposition needs a 2-element subset, got " << p.members();
    throw Error(ErrorKind::WrongCardinality, msg.str());
  }
  auto a = x.index_of(p.members()[0]);
  auto b = x.index_of(p.members()[1]);
  if (!a || !b) {
    std::ostringstream msg;
    msg << p.members() << " is not contained in " << x;
    throw Error(ErrorKind::NotSubset, msg.str());
  }
  std::vector<std::uint32_t> table(x.size());
  std::iota(table.begin(), table.end(), 0u);
  std::swap(table[*a], table[*b]);
  return Bijection::from_indices(x, x, std::move(table));
}

Bijection transposition(const LabeledSet& x, Label a, Label b) {
  return transposition_of_pair(x, Subset::of(x, {a, b}));
}

LabeledSet puncture(const LabeledSet& x, Label removed) {
  auto at = x.position(removed);
  std::vector<Label> rest;
  rest.reserve(x.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (i != at) rest.push_back(x[i]);
  return LabeledSet::from_labels(std::move(rest));
}

std::pair<LabeledSet, Label> extend(const LabeledSet& y) {
  if (!y.empty() && y[y.size() - 1].atom == UINT32_MAX)
    throw Error(ErrorKind::SizeGuard, "no fresh label above the maximum atom");
  Label fresh = y.empty() ? Label(0) : Label(y[y.size() - 1].atom + 1);
  std::vector<Label> labels(y.elements().begin(), y.elements().end());
  labels.push_back(fresh);
  return {LabeledSet::from_labels(std::move(labels)), fresh};
}

}  // namespace deloop
