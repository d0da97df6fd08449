#pragma once

// (H, A)-stability on a surface, reduced to numerical data.
//
// P_{H,A}(E)(m, n) = χ(E(mH + nA)) comes from Riemann–Roch; the reduced
// polynomial is P / (r·H²). Subsheaf candidates are always supplied by the
// caller, so every verdict is relative to that list, and purity is assumed.

#include "mukai/mukai_vector.hpp"
#include "mukai/polynomial.hpp"

#include <compare>

namespace mukai {

struct HilbertPolynomials {
  Poly2 full;     ///< P_{H,A}(E)
  Poly2 reduced;  ///< P_{H,A}(E) / (r·H²)
};

/// Requires r > 0 and H, A in the positive cone.
HilbertPolynomials hilbert2(const Surface& surface, const NumericalSheaf& e, const RatVector& h, const RatVector& a);

/// χ(E ⊗ L)/r for L = m·H + z·A, as a polynomial in z. Requires r > 0.
Poly1 chi_twist_poly(const Surface& surface, const NumericalSheaf& e, const Integer& m, const RatVector& h,
                     const RatVector& a);

/// Compares χ(F'(mH + zA))/r' with χ(F(mH + zA))/r as polynomials in z.
std::strong_ordering chi_twist_cmp(const Surface& surface, const NumericalSheaf& sub, const NumericalSheaf& f,
                                   const Integer& m, const RatVector& h, const RatVector& a);

/// μ_X(E) = c1(E)·X / rk E.
Rational slope(const Surface& surface, const NumericalSheaf& e, const RatVector& x);

struct SlopeTriple {
  Rational mu_h;
  Rational chi_over_rank;
  Rational neg_mu_a;

  friend std::strong_ordering operator<=>(const SlopeTriple& a, const SlopeTriple& b);
  friend bool operator==(const SlopeTriple&, const SlopeTriple&) = default;
};

SlopeTriple slope_triple(const Surface& surface, const NumericalSheaf& e, const RatVector& h, const RatVector& a);

/// Lexicographic comparison of the slope triples of `first` and `second`;
/// equals cmp_zero of their reduced (H, A) polynomials.
std::strong_ordering slope_triple_cmp(const Surface& surface, const NumericalSheaf& first,
                                      const NumericalSheaf& second, const RatVector& h, const RatVector& a);

enum class StabilityLabel {
  HUnstable,
  HSemistableOnly,         ///< H-semistable, not (H, A)-semistable
  HASemistableOnly,        ///< (H, A)-semistable, not (H, A)-stable
  HAStableNotHStable,
  HStable,
};

std::string to_string(StabilityLabel label);

struct CandidateDiagnostic {
  std::size_t index;
  std::string message;
};

/// Witness lists hold indices into the candidate list.
struct StabilityVerdict {
  StabilityLabel label = StabilityLabel::HStable;
  std::vector<std::size_t> h_destabilizing;     ///< p_H(E) > p_H(F)
  std::vector<std::size_t> h_equal;             ///< p_H(E) = p_H(F)
  std::vector<std::size_t> ha_destabilizing;    ///< p_{H,A}(E) >₀ p_{H,A}(F)
  std::vector<std::size_t> ha_equal;            ///< p_{H,A}(E) = p_{H,A}(F)
  std::vector<CandidateDiagnostic> rejected;    ///< candidates failing 0 < rk E < rk F
  bool purity_assumed = true;
};

StabilityVerdict classify_destab(const Surface& surface, const NumericalSheaf& f,
                                 const std::vector<NumericalSheaf>& subs, const RatVector& h, const RatVector& a);

/// f(h) = (χ(E)·c1(F) − χ(F)·c1(E))·h for one-dimensional E ⊂ F. Negative:
/// E does not destabilize at h; zero: h lies on the wall; positive: E
/// destabilizes.
Rational dim1_functional(const Surface& surface, const NumericalSheaf& sub, const NumericalSheaf& f,
                         const RatVector& h);

}  // namespace mukai
