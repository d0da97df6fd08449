#pragma once

// Decompositions v = Σ n_i·v_i into Mukai vectors of stable summands of a
// polystable sheaf, and the shape of the resulting terminalisation.

#include "mukai/classifier.hpp"

namespace mukai {

struct DecompositionPart {
  Integer n;
  MukaiVector v;
};

struct DecompositionCandidate {
  std::vector<DecompositionPart> parts;  ///< distinct v, sorted lexicographically
  bool trivial = false;                  ///< the single part 1·v
};

struct DecompositionBounds {
  /// ‖·‖∞ bound on every coordinate of every part.
  Integer max_abs;
};

/// Whether w may appear as a part of a decomposition of v at H:
/// w² ≥ −2, and for v0 > 0: w0 ≥ 1, w1·H/w0 = v1·H/v0, w2/w0 = v2/v0;
/// for v0 = 0: w0 = 0, w1·H0 > 0 for the reference class H0, and
/// (χ(w)·v1 − χ(v)·w1)·H = 0.
bool admissible_part(const Surface& surface, const MukaiVector& v, const RatVector& h, const MukaiVector& w);

/// All multiset decompositions with parts inside the box, canonically sorted.
/// The trivial decomposition is included when v itself fits the box.
std::vector<DecompositionCandidate> enumerate_decompositions(const Surface& surface, const MukaiVector& v,
                                                             const RatVector& h, const DecompositionBounds& bounds);

enum class FactorKind { Point, Hilbert, Symmetric };
std::string to_string(FactorKind kind);

struct ShapeFactor {
  FactorKind kind;
  Integer n;
  MukaiVector v;
  Integer dimension;
  std::optional<ModuliStatus> part_status;  ///< absent for rigid parts
};

struct TerminalisationShape {
  std::vector<ShapeFactor> factors;
  bool smooth = false;
  Integer dimension;
  ModuliStatus status = ModuliStatus::ConditionUnverified;
  std::vector<std::string> citations;
};

TerminalisationShape terminalisation_shape(const Surface& surface, const DecompositionCandidate& d,
                                           const RatVector& h);

std::string to_string(const DecompositionCandidate& d);

}  // namespace mukai
