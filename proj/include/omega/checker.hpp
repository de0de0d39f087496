#ifndef OMEGA_CHECKER_HPP
#define OMEGA_CHECKER_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "omega/invariants.hpp"

namespace omega {

/// The four equivalent conditions at e = pd M, each computed through its
/// own pipeline. agree must be true for a sound engine; a false value is
/// a certified implementation bug and raises the distinguished failure.
struct ConditionVerdict {
  std::size_t e = 0;
  bool depthEqualsOmega = false; // (1)
  bool h0Nonzero = false;        // (2) Gamma_{I_e}(M) != 0
  bool homNonzero = false;       // (3) Hom(Ext^e(M,S), M) != 0
  bool torNonzero = false;       // (4) Tor_e(M,M) != 0
  bool agree = false;
};

bool conditionDepthOmega(const PresentedModule& M);
bool conditionH0(const PresentedModule& M);
bool conditionHom(const PresentedModule& M);
bool conditionTor(const PresentedModule& M);

/// Evaluates all four conditions independently and sets the agree flag.
/// Raises InternalInconsistencyError on disagreement unless
/// throwOnDisagreement is false (the CLI maps the error to exit 1).
ConditionVerdict checkEquivalence(const PresentedModule& M,
                                  bool throwOnDisagreement = true);

enum class GapVerdict { Confirmed, GapNotOne, Refuted };

struct GapOneReport {
  std::int64_t gap = 0; // dim - depth
  GapVerdict verdict = GapVerdict::GapNotOne;
  bool claimedCohomology = false;
};

/// dim - depth != 1 -> GapNotOne; otherwise Confirmed iff depth = omega.
/// A Refuted verdict on a claimed cohomology ring is reported, never a
/// failure of the run.
GapOneReport checkGapOne(const PresentedModule& M, bool claimCohomologyRing);

/// Exhaustive combinatorial Ass(S/I) for a monomial ideal I, as variable
/// index sets: subsets A with (I : m) = (x_i : i in A) for a witness
/// monomial m dividing lcm(generators). Independent of the Ext pipeline.
std::set<std::vector<std::size_t>> monomialAssOracle(const Ideal& I);

/// n - max cardinality over the oracle's answer.
std::size_t oracleOmega(const Ideal& I);

const char* gapVerdictName(GapVerdict v);

} // namespace omega

#endif
