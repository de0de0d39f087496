#ifndef OMEGA_CONFIG_HPP
#define OMEGA_CONFIG_HPP

#include <cstdint>

namespace omega {

/// Resource caps. Defaults may be overridden through the environment:
///   OMEGA_MAX_SPAIRS         (default 500000)  - S-pair reductions per Groebner run
///   OMEGA_DEGREE_CAP         (default 64)      - graded-piece enumeration degree
///   OMEGA_RESOLUTION_MARGIN  (default 8)       - extra pre-minimization levels
struct Caps {
  std::uint64_t maxSPairs = 500000;
  int degreeCap = 64;
  int resolutionMargin = 8;
};

/// Process-wide caps, resolved from the environment on first use.
const Caps& caps();

} // namespace omega

#endif
