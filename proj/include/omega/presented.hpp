#ifndef OMEGA_PRESENTED_HPP
#define OMEGA_PRESENTED_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "omega/groebner.hpp"

namespace omega {

/// Finitely presented graded module: generator degrees plus a homogeneous
/// relation submodule of the corresponding free module.
class PresentedModule {
public:
  PresentedModule(RingPtr ring, std::vector<std::int64_t> generatorDegrees,
                  std::vector<FreeModuleElement> relations);

  static PresentedModule cyclicQuotient(const RingPtr& ring, const Ideal& I);
  static PresentedModule freeModule(const RingPtr& ring,
                                    std::vector<std::int64_t> degrees);
  static PresentedModule directSum(const PresentedModule& a,
                                   const PresentedModule& b);

  const RingPtr& ring() const { return ring_; }
  std::size_t generatorCount() const { return degrees_.size(); }
  const std::vector<std::int64_t>& generatorDegrees() const { return degrees_; }
  const Submodule& relations() const { return relations_; }
  const AmbientPtr& ambient() const { return relations_.ambient(); }

  /// All generator degrees shifted by s (M(-s) in twist notation).
  PresentedModule shifted(std::int64_t s) const;

private:
  RingPtr ring_;
  std::vector<std::int64_t> degrees_;
  Submodule relations_;
};

/// True iff every generator's basis vector reduces to zero modulo the
/// relation basis.
bool isZeroModule(const PresentedModule& M);

/// ann(M), computed as the intersection over generators g_i of the
/// colon ideals (relations : g_i). Unit ideal for the zero module.
Ideal annihilator(const PresentedModule& M);

std::vector<std::pair<std::size_t, Monomial>> gradedPieceBasis(
    const PresentedModule& M, std::int64_t q);

/// dim_k of the degree-q piece.
std::size_t gradedPieceDim(const PresentedModule& M, std::int64_t q);

} // namespace omega

#endif
