#ifndef OMEGA_FREEMOD_HPP
#define OMEGA_FREEMOD_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/poly.hpp"

namespace omega {

class FreeAmbient;
using AmbientPtr = std::shared_ptr<const FreeAmbient>;

/// A graded free module S^r with a degree shift per basis element and a
/// fixed module term order. The default order is TOP: ring order on the
/// monomial, ties broken toward the lower component. An ambient may mark
/// its first `eliminationSplit` components as an elimination block whose
/// terms dominate every term of the remaining components; this is what
/// backs syzygy computation of arbitrary generator lists.
class FreeAmbient {
public:
  static AmbientPtr create(RingPtr ring, std::vector<std::int64_t> twists,
                           std::size_t eliminationSplit = 0);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return twists_.size(); }
  const std::vector<std::int64_t>& twists() const { return twists_; }
  std::int64_t twist(std::size_t c) const { return twists_[c]; }
  std::size_t eliminationSplit() const { return split_; }

  /// Total order on (component, monomial) keys.
  Cmp compare(std::size_t compA, const Monomial& a, std::size_t compB,
              const Monomial& b) const;

  bool sameAs(const FreeAmbient& o) const;

private:
  FreeAmbient(RingPtr ring, std::vector<std::int64_t> twists, std::size_t split)
    : ring_(std::move(ring)), twists_(std::move(twists)), split_(split) {}

  RingPtr ring_;
  std::vector<std::int64_t> twists_;
  std::size_t split_;
};

void checkSameAmbient(const AmbientPtr& a, const AmbientPtr& b);

/// Element of a graded free module: terms (component, monomial, coeff)
/// kept sorted descending under the ambient order, zero coefficients
/// dropped. Canonical form, so equality is termwise.
class FreeModuleElement {
public:
  struct Term {
    std::size_t comp;
    Monomial mon;
    FpElt coeff;
  };

  explicit FreeModuleElement(AmbientPtr amb) : amb_(std::move(amb)) {}
  FreeModuleElement(AmbientPtr amb, std::vector<Term> terms);

  static FreeModuleElement zero(const AmbientPtr& amb) {
    return FreeModuleElement(amb);
  }
  static FreeModuleElement basis(const AmbientPtr& amb, std::size_t comp);
  /// p placed in component comp.
  static FreeModuleElement fromPolynomial(const AmbientPtr& amb,
                                          std::size_t comp,
                                          const Polynomial& p);

  const AmbientPtr& ambient() const { return amb_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  const Term& leadingTerm() const;

  FreeModuleElement operator+(const FreeModuleElement& o) const;
  FreeModuleElement operator-(const FreeModuleElement& o) const;
  FreeModuleElement scaled(FpElt c) const;
  FreeModuleElement timesMonomial(const Monomial& m, FpElt c) const;
  FreeModuleElement timesPolynomial(const Polynomial& p) const;
  /// Same terms reinterpreted in another ambient of equal rank (used to
  /// move projected syzygies between ambients; degrees shift uniformly).
  FreeModuleElement inAmbient(const AmbientPtr& amb) const;

  bool operator==(const FreeModuleElement& o) const;
  bool operator!=(const FreeModuleElement& o) const { return !(*this == o); }

  /// Component c as a plain polynomial.
  Polynomial component(std::size_t c) const;

  /// Twisted degree if homogeneous; nullopt if not. Throws on zero.
  std::optional<std::int64_t> degreeIfHomogeneous() const;
  bool isHomogeneous() const {
    return isZero() || degreeIfHomogeneous().has_value();
  }

  std::string str() const;

private:
  AmbientPtr amb_;
  std::vector<Term> terms_;
};

} // namespace omega

#endif
