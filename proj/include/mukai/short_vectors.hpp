#pragma once

#include "mukai/scalar.hpp"

#include <functional>

namespace mukai {

/// Fincke–Pohst enumeration of all nonzero integer x with xᵀ·form·x ≤ bound.
/// `form` must be symmetric positive definite; everything is exact, so no
/// boundary vector is lost to rounding. Both x and −x are reported.
std::vector<IntVector> short_vectors(const RatMatrix& form, const Rational& bound);

/// Same enumeration with a visitor instead of a result vector.
void for_each_short_vector(const RatMatrix& form, const Rational& bound,
                           const std::function<void(const IntVector&)>& visit);

/// Columns form a Z-basis of {x ∈ Zⁿ : row · x = 0}. `row` must be nonzero.
IntMatrix kernel_basis(const IntVector& row);

}  // namespace mukai
