#ifndef OMEGA_FIELD_HPP
#define OMEGA_FIELD_HPP

#include <cstdint>

#include "omega/errors.hpp"

namespace omega {

bool isPrime(std::uint32_t n);

/// Element of the prime field F_p, 2 <= p < 2^31. The residue is kept
/// fully reduced; all arithmetic is exact.
class FpElt {
public:
  FpElt() : v_(0), p_(0) {}
  FpElt(std::int64_t value, std::uint32_t p) : p_(p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool isZero() const { return v_ == 0; }
  bool isOne() const { return v_ == 1; }

  FpElt operator+(FpElt o) const {
    checkSame(o);
    std::uint32_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return fromRaw(s, p_);
  }
  FpElt operator-(FpElt o) const {
    checkSame(o);
    std::uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return fromRaw(s, p_);
  }
  FpElt operator-() const {
    return fromRaw(v_ == 0 ? 0 : p_ - v_, p_);
  }
  FpElt operator*(FpElt o) const {
    checkSame(o);
    std::uint64_t prod = static_cast<std::uint64_t>(v_) * o.v_;
    return fromRaw(static_cast<std::uint32_t>(prod % p_), p_);
  }
  FpElt inverse() const;
  FpElt operator/(FpElt o) const { return *this * o.inverse(); }

  bool operator==(const FpElt& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const FpElt& o) const { return !(*this == o); }

  static FpElt zero(std::uint32_t p) { return fromRaw(0, p); }
  static FpElt one(std::uint32_t p) { return fromRaw(p == 1 ? 0 : 1, p); }

private:
  static FpElt fromRaw(std::uint32_t v, std::uint32_t p) {
    FpElt e;
    e.v_ = v;
    e.p_ = p;
    return e;
  }
  void checkSame(const FpElt& o) const {
    if (p_ != o.p_) throw MismatchError("field characteristic mismatch");
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

} // namespace omega

#endif
