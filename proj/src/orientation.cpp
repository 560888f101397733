#include "deloop/orientation.hpp"

#include <bit>
#include <sstream>

namespace deloop {

Orientation Orientation::from_bits(LabeledSet carrier, std::uint64_t bits) {
  if (carrier.size() > kMaxOrientationSize) {
    std::ostringstream msg;
    msg << "orientations are limited to " << kMaxOrientationSize << " elements";
    throw Error(ErrorKind::SizeGuard, msg.str());
  }
  if (bits & ~full_mask(carrier.size()))
    throw Error(ErrorKind::WrongCardinality, "orientation has bits beyond its pair count");
  return Orientation(std::move(carrier), bits);
}

Label Orientation::choice(Label a, Label b) const {
  auto i = carrier_.position(a);
  auto j = carrier_.position(b);
  if (i == j) throw Error(ErrorKind::WrongCardinality, "a pair needs two distinct labels");
  if (i > j) std::swap(i, j);
  return chooses_larger(i, j) ? carrier_[j] : carrier_[i];
}

std::size_t relative_inversions(const Orientation& u, const Orientation& v) {
  if (!(u.carrier() == v.carrier()))
    throw Error(ErrorKind::CarrierMismatch, "orientations live on different sets");
  return static_cast<std::size_t>(std::popcount(u.bits() ^ v.bits()));
}

Orientation canonical_orientation(const LabeledSet& x) {
  if (x.size() < 2) throw Error(ErrorKind::TooSmall, "orientations need at least 2 elements");
  return Orientation::from_bits(x, full_mask(x.size()));
}

Orientation orientation_action(const Bijection& e, const Orientation& u) {
  if (!(u.carrier() == e.domain()))
    throw Error(ErrorKind::CarrierMismatch, "orientation does not live on the domain");
  const std::size_t n = e.size();
  std::uint64_t bits = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      // Preimage pair in X, the element u picks there, and its image in Y.
      std::size_t i = e.preimage_index(a);
      std::size_t j = e.preimage_index(b);
      if (i > j) std::swap(i, j);
      const std::size_t picked = u.chooses_larger(i, j) ? j : i;
      if (e.image_index(picked) == b) bits |= std::uint64_t{1} << pair_index(a, b, n);
    }
  }
  return Orientation::from_bits(e.codomain(), bits);
}

}  // namespace deloop
