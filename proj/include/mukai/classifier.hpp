#pragma once

// Decision procedures for the symplectic-resolution question over numerical
// input. Every verdict is conditional on the nonemptiness assumptions listed
// in the report; nothing here constructs a moduli space.

#include "mukai/walls.hpp"

#include <optional>

namespace mukai {

/// φ(v0) = 2(v0³ − (2−ε)v0² + v0(1−2ε) − (v0−1)/⌊v0²/4⌋). Requires v0 ≥ 2.
Rational phi(const Integer& v0, int epsilon);

enum class ModuliStatus {
  SymplecticResolutionExists,
  SingularTerminalisationNoResolution,
  SmoothAlready,
  ConditionUnverified,
};

std::string to_string(ModuliStatus status);

struct HilbK3 {
  Integer n;
};

struct ClassificationReport {
  MukaiVector v;
  Integer multiplicity;
  MukaiVector primitive;
  Integer mukai_square;
  std::optional<Integer> dimension;

  /// v-generality of H; empty when the wall enumeration is unsupported.
  std::optional<bool> h_general;
  std::vector<Wall> walls_at_h;
  std::optional<RatVector> general_neighbor;

  ModuliStatus status = ModuliStatus::ConditionUnverified;
  /// True when the moduli space over a general class is already nonsingular.
  bool smooth_moduli = false;
  bool within_hypotheses = true;
  std::optional<HilbK3> deformation_class;
  /// Set when v2 = 0 forced a twist before classification.
  std::optional<MukaiVector> twisted;
  std::optional<IntVector> twist_class;

  std::string detail;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  std::vector<std::string> citations;
};

/// v0 = 0. Throws InputError for v1 = 0 or v0 ≠ 0, DomainError when
/// v1·H0 ≤ 0 for the reference ample class H0.
ClassificationReport classify_dim1(const Surface& surface, const MukaiVector& v, const RatVector& h);

/// v0 ≥ 1.
ClassificationReport classify_dim2(const Surface& surface, const MukaiVector& v, const RatVector& h);

/// Dispatches on v0.
ClassificationReport classify(const Surface& surface, const MukaiVector& v, const RatVector& h);

struct GateResult {
  bool guaranteed = false;
  std::string reason;
};

/// Whether an (H, A)-stable sheaf with primitive Mukai vector w is known to
/// exist: w0 = 1, H is w-general, or w² > φ(w0).
GateResult existence_gate(const Surface& surface, const MukaiVector& w, const RatVector& h);

struct DeformationResult {
  std::optional<HilbK3> hilb;
  std::string note;
};

/// K3 only; A must be w-general. Absent unless w0 = 1 or w² > φ(w0).
DeformationResult deformation_class(const Surface& surface, const MukaiVector& w, const RatVector& h,
                                    const RatVector& a);

}  // namespace mukai
