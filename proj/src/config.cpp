#include "omega/config.hpp"

#include <cstdlib>
#include <string>

namespace omega {

namespace {

std::uint64_t envU64(const char* name, std::uint64_t fallback) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0) return fallback;
  return static_cast<std::uint64_t>(v);
}

Caps readCaps() {
  Caps c;
  c.maxSPairs = envU64("OMEGA_MAX_SPAIRS", c.maxSPairs);
  c.degreeCap = static_cast<int>(
      envU64("OMEGA_DEGREE_CAP", static_cast<std::uint64_t>(c.degreeCap)));
  c.resolutionMargin = static_cast<int>(envU64(
      "OMEGA_RESOLUTION_MARGIN", static_cast<std::uint64_t>(c.resolutionMargin)));
  return c;
}

} // namespace

const Caps& caps() {
  static const Caps c = readCaps();
  return c;
}

} // namespace omega
