#ifndef OMEGA_HOMOLOGY_HPP
#define OMEGA_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "omega/resolution.hpp"

namespace omega {

/// span(numerator)/span(denominator) as a presented module. Requires
/// span(denominator) within span(numerator); generators ordered by
/// (degree, index), relations pulled back through one syzygy run.
PresentedModule subquotientPresentation(
    const AmbientPtr& ambient, const std::vector<FreeModuleElement>& numerator,
    const std::vector<FreeModuleElement>& denominator);

/// Ext^j_S(M, S) from the dualized minimal resolution. Zero module for
/// j > pd M (not an error).
PresentedModule extModule(const PresentedModule& M, std::size_t j);
PresentedModule extModule(const GradedResolution& minimalResolution,
                          std::size_t j);

/// Tor_j^S(M, N): homology of (minimal resolution of M) tensor N.
PresentedModule torModule(const PresentedModule& M, const PresentedModule& N,
                          std::size_t j);

/// Hom_S(N, M) as a presented module, from N's presentation.
PresentedModule homModule(const PresentedModule& N, const PresentedModule& M);

} // namespace omega

#endif
