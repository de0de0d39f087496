#ifndef OMEGA_INVARIANTS_HPP
#define OMEGA_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "omega/homology.hpp"

namespace omega {

/// Hilbert series numerator over the common denominator
/// prod_i (1 - t^{w_i}). Numerator from the minimal resolution.
struct HilbertSeries {
  std::map<std::int64_t, std::int64_t> numerator; // degree -> coefficient
  std::vector<std::uint32_t> denominatorWeights;
  /// Order of vanishing of the numerator at t = 1 (n - dim M).
  std::size_t vanishingOrderAtOne() const;
};

/// Per homological degree e: I_e = ann Ext^e(M,S), its codimension, and
/// the flag (Ext^e != 0 and codim I_e = e). The flagged set is exactly
/// the codimension set of Ass(M).
struct ExtAnnihilatorProfile {
  struct Row {
    std::size_t e;
    bool extNonzero;
    Ideal annihilator;
    std::size_t codimension; // n+1 when Ext^e = 0 (empty support)
    bool flag;
  };
  std::vector<Row> rows;
  std::size_t maxFlagged() const; // throws if no row is flagged
};

struct InvariantReport {
  std::size_t depth = 0;
  std::size_t dim = 0;
  std::size_t codim = 0;
  std::size_t pd = 0;
  std::size_t omega = 0;
  ExtAnnihilatorProfile profile;
  HilbertSeries hilbert;
  BettiTable betti;
};

/// codim of a homogeneous ideal, computed combinatorially on the initial
/// ideal: n minus the largest variable subset meeting no minimal
/// generator's support. codim of the unit ideal is n+1 by convention.
std::size_t idealCodimension(const Ideal& I);

/// min{j : Ext^j(M,S) != 0}; asserted at runtime to equal the
/// combinatorial codimension of ann M (hard internal error otherwise).
std::size_t codimension(const PresentedModule& M);
std::size_t dimensionOf(const PresentedModule& M);
/// n - pd (Auslander-Buchsbaum).
std::size_t depthOf(const PresentedModule& M);

ExtAnnihilatorProfile extAnnihilatorProfile(const PresentedModule& M);
ExtAnnihilatorProfile extAnnihilatorProfile(const PresentedModule& M,
                                            const GradedResolution& minimal);

/// n - max{e : profile flag_e}.
std::size_t omegaOf(const PresentedModule& M);

HilbertSeries hilbertSeries(const PresentedModule& M);

/// Graded dimensions dim_k H^i_m(M)_q for q in [qLow, qHigh], recovered
/// through local duality: dim Ext^{n-i}(M,S)_{-q-sigma}.
std::map<std::int64_t, std::size_t> localCohomologyGradedDims(
    const PresentedModule& M, std::size_t i, std::int64_t qLow,
    std::int64_t qHigh);

/// Full invariant suite over one minimal resolution.
InvariantReport invariantReport(const PresentedModule& M);

} // namespace omega

#endif
