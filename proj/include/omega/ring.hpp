#ifndef OMEGA_RING_HPP
#define OMEGA_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "omega/errors.hpp"
#include "omega/field.hpp"

namespace omega {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Exponent vector over a fixed ring. Exponents are bounded to 32 bits;
/// overflow is a hard error, never wraparound.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}
  static Monomial unit(std::size_t n) {
    return Monomial(std::vector<std::uint32_t>(n, 0));
  }

  std::size_t vars() const { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  bool isUnit() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }
  std::uint64_t totalDegree() const {
    std::uint64_t t = 0;
    for (auto x : e_) t += x;
    return t;
  }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Quotient o.divides(*this) is required by the caller.
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
  std::vector<std::uint32_t> e_;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Weighted polynomial ring k[x_1..x_n] over a prime field, each variable
/// carrying a positive integer weight. Values are immutable once built.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
public:
  /// Validates names (unique), weights (>= 1) and p (prime, < 2^31).
  static RingPtr create(std::vector<std::string> names,
                        std::vector<std::uint32_t> weights,
                        std::uint32_t characteristic);

  std::size_t varCount() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  std::uint32_t weight(std::size_t i) const { return weights_[i]; }
  std::uint32_t characteristic() const { return p_; }
  /// sigma = sum of the variable weights.
  std::int64_t sigma() const { return sigma_; }

  FpElt scalar(std::int64_t v) const { return FpElt(v, p_); }
  FpElt one() const { return FpElt::one(p_); }
  FpElt zero() const { return FpElt::zero(p_); }

  std::int64_t weightedDegree(const Monomial& m) const;

  /// Fixed global monomial order: weighted degree, then degrevlex on the
  /// exponent vector, then lex as the final tie-break.
  Cmp compare(const Monomial& a, const Monomial& b) const;

  bool sameAs(const GradedRing& o) const;

  std::string formatMonomial(const Monomial& m) const;

private:
  GradedRing(std::vector<std::string> names, std::vector<std::uint32_t> weights,
             std::uint32_t p);

  std::vector<std::string> names_;
  std::vector<std::uint32_t> weights_;
  std::uint32_t p_;
  std::int64_t sigma_;
};

void checkSameRing(const RingPtr& a, const RingPtr& b);

} // namespace omega

#endif
