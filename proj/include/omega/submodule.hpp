#ifndef OMEGA_SUBMODULE_HPP
#define OMEGA_SUBMODULE_HPP

#include <utility>
#include <vector>

#include "omega/freemod.hpp"

namespace omega {

/// Graded submodule of a free module, given by homogeneous generators.
/// The unique reduced Groebner basis for the fixed order is computed at
/// construction, so values are immutable and freely shareable afterwards.
class Submodule {
public:
  Submodule(AmbientPtr ambient, std::vector<FreeModuleElement> generators);

  const AmbientPtr& ambient() const { return amb_; }
  const std::vector<FreeModuleElement>& generators() const { return gens_; }
  /// Reduced Groebner basis: monic, pairwise tail-irreducible, sorted
  /// descending by leading term.
  const std::vector<FreeModuleElement>& reducedBasis() const { return basis_; }

  bool isZeroSpan() const { return basis_.empty(); }
  bool contains(const FreeModuleElement& v) const;
  bool containsSpanOf(const Submodule& o) const;
  /// Span equality, decided by equality of reduced bases.
  bool sameSpanAs(const Submodule& o) const;

private:
  AmbientPtr amb_;
  std::vector<FreeModuleElement> gens_;
  std::vector<FreeModuleElement> basis_;
};

/// Homogeneous ideal: a submodule of the rank-1, twist-0 free module.
class Ideal {
public:
  Ideal(RingPtr ring, const std::vector<Polynomial>& generators);

  const RingPtr& ring() const { return sub_.ambient()->ring(); }
  const Submodule& submodule() const { return sub_; }
  std::vector<Polynomial> reducedBasis() const;
  bool isZeroIdeal() const { return sub_.isZeroSpan(); }
  bool isUnitIdeal() const;
  bool contains(const Polynomial& f) const;
  bool sameAs(const Ideal& o) const { return sub_.sameSpanAs(o.sub_); }

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring) {
    return Ideal(ring, {Polynomial::one(ring)});
  }

private:
  Submodule sub_;
};

} // namespace omega

#endif
