#pragma once

// Numerical checks on a filtration 0 = F_0 ⊂ … ⊂ F_n = F given by its
// graded pieces gr_i, all of positive rank.

#include "mukai/mukai_vector.hpp"

#include <optional>

namespace mukai {

struct BoundCheck {
  Rational value;
  Rational bound;
  bool satisfied = false;
};

struct Rank2Identity {
  Integer c1_difference_square;  ///< (c1' − c1'')²
  Integer v_square_minus_4;      ///< v² − 4
  Integer parts_sum;             ///< v'² + v''² − 2
  Integer pairing;               ///< ⟨v', v''⟩; the three agree iff it is 1
  bool holds = false;
  bool hodge_sign = false;       ///< v² − 4 ≤ 0
};

struct FiltrationReport {
  NumericalSheaf total;
  Rational defect_lhs;  ///< Σ Δ_i/r_i − Δ(F)/r
  Rational defect_rhs;  ///< Σ_{i<j} (r_i r_j / r)(c_i/r_i − c_j/r_j)²

  bool equal_h_slope = false;
  bool distinct_c1_over_r = false;
  bool deltas_nonnegative = false;

  /// Σ Δ_i/r_i against Δ/r, and the two sharper bounds.
  std::optional<BoundCheck> delta_bound;
  std::optional<BoundCheck> delta_lcm_bound;
  std::optional<BoundCheck> delta_simple_bound;
  /// Σ_{i<j} χ(gr_i, gr_j) against its upper bound (n ≥ 2).
  std::optional<BoundCheck> chi_bound;
  std::optional<Rank2Identity> rank2;
  std::vector<std::string> notes;
};

/// Throws InputError for an empty list or a piece of rank ≤ 0, and
/// std::logic_error if the two sides of the defect identity disagree.
FiltrationReport filtration_checks(const Surface& surface, const std::vector<NumericalSheaf>& graded,
                                   const RatVector& h);

}  // namespace mukai
