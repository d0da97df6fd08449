#pragma once

// Walls and chambers in the positive cone for a fixed Mukai vector.
//
// Positive rank (v0 ≥ 2): ξ⊥ for integral ξ with −v0²Δ/4 ≤ ξ² < 0.
// Rank zero: L⊥ for L = χ'·v1 − v2·ℓ with L² < 0, where (ℓ, χ') is the
// numerical data of a candidate subsheaf.
//
// A wall is identified by its primitive, sign-normalized normal; witnesses
// only record where it came from.

#include "mukai/mukai_vector.hpp"

#include <optional>
#include <variant>

namespace mukai {

struct XiWitness {
  Integer xi_square;  ///< square of the primitive normal
};

struct LWitness {
  IntVector ell;     ///< c1 of the candidate subsheaf
  Integer chi_sub;   ///< its Euler characteristic
  IntVector L;       ///< χ'·v1 − v2·ℓ before normalization
};

struct Wall {
  IntVector normal;
  std::variant<XiWitness, LWitness> witness;

  bool rank_zero() const { return std::holds_alternative<LWitness>(witness); }
};

/// Endpoint incidences are kept and flagged. `contains_segment` marks a wall
/// whose hyperplane contains the whole segment; its `t` is 0.
struct Crossing {
  Rational t;
  Wall wall;
  bool at_start = false;
  bool at_end = false;
  bool contains_segment = false;
};

struct SegmentWallReport {
  RatVector from;
  RatVector to;
  std::vector<Crossing> crossings;  ///< sorted by t, then by normal

  /// True if some wall meets the open segment.
  bool crosses_interior() const;
};

/// Half-width of the positive-rank window: v0²·Δ/4.
Rational wall_window(const Surface& surface, const MukaiVector& v);

/// All positive-rank walls through h. Enumerates the negative definite
/// lattice h⊥ by Fincke–Pohst. Requires v0 ≥ 2, Δ(v) > 0, h in the positive cone.
std::vector<Wall> walls_through(const Surface& surface, const RatVector& h, const MukaiVector& v);

/// All positive-rank walls meeting the closed segment [from, to], with the
/// exact crossing parameter along (1 − t)·from + t·to.
SegmentWallReport walls_on_segment(const Surface& surface, const RatVector& from, const RatVector& to,
                                   const MukaiVector& v);

struct Rank0Options {
  /// ‖ℓ‖∞ bound on candidate c1; default ‖v1‖∞ + 2.
  std::optional<Integer> box;
  /// Explicit (ℓ, χ') candidates. When nonempty the box scan is skipped,
  /// which also lifts the v1² > 0 requirement.
  std::vector<std::pair<IntVector, Integer>> candidates;
};

/// Every rank-zero wall produced by the candidate set, whether or not it
/// meets a given region. Requires v0 = 0, v1 ≠ 0, v1·reference_ample > 0.
std::vector<Wall> rank0_wall_candidates(const Surface& surface, const MukaiVector& v, const Rank0Options& options = {});

/// Rank-zero walls meeting [from, to].
SegmentWallReport rank0_walls_on_segment(const Surface& surface, const MukaiVector& v, const RatVector& from,
                                         const RatVector& to, const Rank0Options& options = {});
std::vector<Wall> rank0_walls(const Surface& surface, const MukaiVector& v, const RatVector& from,
                              const RatVector& to, const Rank0Options& options = {});
std::vector<Wall> rank0_walls_through(const Surface& surface, const MukaiVector& v, const RatVector& h,
                                      const Rank0Options& options = {});

/// Walls through h of the kind matching v0 (none for v0 = 1).
std::vector<Wall> walls_at(const Surface& surface, const RatVector& h, const MukaiVector& v);
bool is_general(const Surface& surface, const RatVector& h, const MukaiVector& v);

/// A v-general class A' on the segment from H toward `toward` such that the
/// open segment (H, A') meets no wall. Throws DomainError when the whole
/// segment lies in one wall.
RatVector general_neighbor(const Surface& surface, const RatVector& h, const MukaiVector& v, const RatVector& toward);
/// Same, with a deterministic choice of direction.
RatVector general_neighbor(const Surface& surface, const RatVector& h, const MukaiVector& v);

/// Picard rank 2 only: the primitive integral rays, positive against the
/// reference ample class, along which the walls on [from, to] meet it.
std::vector<IntVector> wall_rays(const Surface& surface, const MukaiVector& v, const RatVector& from,
                                 const RatVector& to);

/// Ray of the positive cone orthogonal to `normal` (Picard rank 2).
IntVector orthogonal_ray(const Surface& surface, const IntVector& normal);

}  // namespace mukai
