#ifndef OMEGA_RESOLUTION_HPP
#define OMEGA_RESOLUTION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "omega/presented.hpp"

namespace omega {

/// Chain of graded free modules F_len -> ... -> F_1 -> F_0 with
/// homogeneous differentials; differential(i) holds the columns of
/// d_i : F_i -> F_{i-1} as elements of the F_{i-1} ambient.
class GradedResolution {
public:
  GradedResolution(std::vector<AmbientPtr> levels,
                   std::vector<std::vector<FreeModuleElement>> differentials,
                   bool minimal);

  std::size_t length() const { return levels_.size() - 1; }
  const AmbientPtr& level(std::size_t i) const { return levels_[i]; }
  std::size_t rank(std::size_t i) const { return levels_[i]->rank(); }
  /// i in [1, length]; columns of d_i.
  const std::vector<FreeModuleElement>& differential(std::size_t i) const {
    return diffs_[i - 1];
  }
  bool isMinimal() const { return minimal_; }

  /// Entry (row, col) of d_i as a polynomial.
  Polynomial entry(std::size_t i, std::size_t row, std::size_t col) const;

private:
  std::vector<AmbientPtr> levels_;
  std::vector<std::vector<FreeModuleElement>> diffs_;
  bool minimal_;
};

/// Schreyer resolution by iterated syzygyBasis, minimized in place.
/// maxLength must be at least the ring's variable count; the builder may
/// internally run a few levels past it before minimization trims the
/// length to pd(M). Raises ResourceCapError if the cap is exceeded.
GradedResolution freeResolution(const PresentedModule& M,
                                std::size_t maxLength);
/// Same with the default cap (variable count).
GradedResolution freeResolution(const PresentedModule& M);

/// Cancels unit entries (deterministic pivoting: lowest internal degree
/// first, then row-major) until every differential entry lies in the
/// irrelevant maximal ideal.
GradedResolution minimize(const GradedResolution& R);

/// Length of the minimal free resolution. M must be nonzero.
std::size_t projectiveDimension(const PresentedModule& M);

/// beta_{i,j}: generator counts of the minimal resolution per homological
/// degree i and internal degree j.
struct BettiTable {
  std::map<std::pair<std::size_t, std::int64_t>, std::size_t> beta;
  std::size_t totalRank(std::size_t i) const;
};

BettiTable bettiTable(const GradedResolution& minimalResolution);

} // namespace omega

#endif
