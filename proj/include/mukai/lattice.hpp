#pragma once

#include "mukai/errors.hpp"
#include "mukai/scalar.hpp"

#include <utility>

namespace mukai {

/// Number of positive and negative entries of a congruence diagonalization,
/// computed exactly. The third member counts zero (degenerate) directions.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

Signature signature(const RatMatrix& form);

/// Néron–Severi lattice: an even, nondegenerate integral form of
/// signature (1, rank − 1).
class NSLattice {
 public:
  explicit NSLattice(IntMatrix gram);

  Eigen::Index rank() const { return gram_.rows(); }

  template <typename Scalar>
  const Matrix<Scalar>& gram() const;

 private:
  IntMatrix gram_;
  RatMatrix gram_q_;
};

template <>
inline const IntMatrix& NSLattice::gram<Integer>() const {
  return gram_;
}
template <>
inline const RatMatrix& NSLattice::gram<Rational>() const {
  return gram_q_;
}

/// d1ᵀ · gram · d2.
template <typename Scalar>
Scalar intersect(const NSLattice& lattice, const Vector<Scalar>& d1, const Vector<Scalar>& d2) {
  if (d1.size() != lattice.rank() || d2.size() != lattice.rank())
    throw InputError("class has " + std::to_string(d1.size() == lattice.rank() ? d2.size() : d1.size()) +
                     " coordinates, lattice rank is " + std::to_string(lattice.rank()));
  return d1.dot(lattice.gram<Scalar>() * d2);
}

template <typename Scalar>
Scalar square(const NSLattice& lattice, const Vector<Scalar>& d) {
  return intersect(lattice, d, d);
}

enum class SurfaceKind { K3, Abelian };

std::string to_string(SurfaceKind kind);

/// A K3 or abelian surface reduced to its numerical data. Ampleness is
/// approximated by the component of the positive cone that contains
/// `reference_ample`.
class Surface {
 public:
  Surface(SurfaceKind kind, NSLattice ns, RatVector reference_ample);
  /// Nonzero canonical classes are accepted only to exercise the general
  /// Riemann–Roch expression; K3 and abelian surfaces have K = 0.
  Surface(SurfaceKind kind, NSLattice ns, RatVector reference_ample, RatVector canonical);

  SurfaceKind kind() const { return kind_; }
  /// 1 for K3, 0 for abelian: td(X) = (1, 0, 2ε).
  int epsilon() const { return kind_ == SurfaceKind::K3 ? 1 : 0; }
  const NSLattice& ns() const { return ns_; }
  Eigen::Index picard_rank() const { return ns_.rank(); }
  const RatVector& reference_ample() const { return reference_ample_; }
  const RatVector& canonical() const { return canonical_; }

 private:
  SurfaceKind kind_;
  NSLattice ns_;
  RatVector reference_ample_;
  RatVector canonical_;
};

/// h² > 0 and h · reference_ample > 0.
bool in_positive_cone(const Surface& surface, const RatVector& h);

/// Throws InputError naming `what` when `h` is outside the positive cone.
void require_positive_cone(const Surface& surface, const RatVector& h, const std::string& what);

}  // namespace mukai
