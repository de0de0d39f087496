#ifndef OMEGA_GROEBNER_HPP
#define OMEGA_GROEBNER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "omega/submodule.hpp"

namespace omega {

/// Unique canonical representative of v modulo span(U): no term of the
/// result is divisible by a leading term of U's reduced basis.
FreeModuleElement normalForm(const FreeModuleElement& v, const Submodule& U);

/// Full division of v by an explicit basis list (in list order). Returns
/// the remainder; quotients[i] collects the factor applied to basis[i],
/// so v = sum quotients[i]*basis[i] + remainder.
FreeModuleElement divideFully(const FreeModuleElement& v,
                              const std::vector<FreeModuleElement>& basis,
                              std::vector<Polynomial>* quotients);

/// Schreyer generators of the syzygies of U's reduced basis (g_1..g_s):
/// ambient rank s, component twists the degrees of the g_i. S-pairs are
/// pruned with the chain criterion only, which keeps the generation
/// property of the remaining sigmas.
Submodule syzygyBasis(const Submodule& U);

/// Kernel of the graded map source -> target determined by `columns`
/// (columns[k] homogeneous of degree source.twist(k), or zero), returned
/// as a submodule of `source`. Backed by the block-elimination order.
Submodule kernelOfColumns(const AmbientPtr& source,
                          const std::vector<FreeModuleElement>& columns);

/// (U : J) = {v : J*v in U}. The zero ideal returns the full ambient.
Submodule colon(const Submodule& U, const Ideal& J);
/// (U : f) for one homogeneous f.
Submodule colonByElement(const Submodule& U, const Polynomial& f);
/// Stable value of (U : J) <= (U : J^2) <= ..., detected by equality of
/// reduced bases of consecutive steps.
Submodule saturate(const Submodule& U, const Ideal& J);

Submodule moduleIntersection(const Submodule& U, const Submodule& V);
Ideal idealIntersection(const Ideal& I, const Ideal& J);

/// Full ambient as a submodule (generated by the basis vectors).
Submodule fullSubmodule(const AmbientPtr& amb);

/// All monomials of the given weighted degree (empty for negative d).
std::vector<Monomial> monomialsOfDegree(const RingPtr& ring, std::int64_t d);

/// k-basis of the degree-q piece of ambient/U: the standard monomials,
/// per component, of matching twisted degree. Enumeration refuses degrees
/// beyond the configured cap.
std::vector<std::pair<std::size_t, Monomial>> gradedPieceBasis(
    const Submodule& U, std::int64_t q);

} // namespace omega

#endif
