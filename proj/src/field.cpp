#include "omega/field.hpp"

namespace omega {

bool isPrime(std::uint32_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FpElt FpElt::inverse() const {
  if (v_ == 0) throw Error("inverse of zero in F_p");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return FpElt(x0, p_);
}

} // namespace omega
