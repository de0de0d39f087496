#ifndef OMEGA_POLY_HPP
#define OMEGA_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/ring.hpp"

namespace omega {

/// Sparse polynomial: terms sorted descending under the ring order, no
/// zero coefficients stored. Canonical form, so equality is termwise.
class Polynomial {
public:
  struct Term {
    Monomial mon;
    FpElt coeff;
  };

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Canonicalizes: merges duplicate monomials, drops zeros, sorts.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr& ring, FpElt c);
  static Polynomial one(const RingPtr& ring);
  static Polynomial variable(const RingPtr& ring, std::size_t i);
  static Polynomial monomialTerm(const RingPtr& ring, Monomial m, FpElt c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }

  const Term& leadingTerm() const;
  /// Coefficient of the degree-0 monomial (zero if absent).
  FpElt constantTerm() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(FpElt c) const;
  Polynomial timesMonomial(const Monomial& m, FpElt c) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Weighted degree if homogeneous, nullopt otherwise; nullopt for zero.
  std::optional<std::int64_t> degreeIfHomogeneous() const;
  bool isHomogeneous() const {
    return isZero() || degreeIfHomogeneous().has_value();
  }

  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

} // namespace omega

#endif
