#pragma once

#include "mukai/lattice.hpp"

namespace mukai {

/// v = (v0, v1, v2) in N0 ⊕ NS(X) ⊕ Z.
struct MukaiVector {
  Integer rank;
  IntVector c1;
  Integer v2;
};

bool operator==(const MukaiVector& a, const MukaiVector& b);
std::strong_ordering lex_compare(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator*(const Integer& m, const MukaiVector& v);
bool is_zero(const MukaiVector& v);

/// Numerical stand-in for a sheaf: rank, first Chern class, Euler characteristic.
struct NumericalSheaf {
  Integer rank;
  IntVector c1;
  Integer chi;

  /// Support dimension: 2 for positive rank, 1 for rank 0 with c1 ≠ 0, else 0.
  int dim() const;
};

NumericalSheaf operator+(const NumericalSheaf& a, const NumericalSheaf& b);

/// (r, c1, χ − ε·r).
MukaiVector mukai_vector(const Surface& surface, const NumericalSheaf& sheaf);
NumericalSheaf numerical_sheaf(const Surface& surface, const MukaiVector& v);

/// ⟨v, w⟩ = v1·w1 − v0·w2 − w0·v2.
Integer mukai_pair(const NSLattice& lattice, const MukaiVector& v, const MukaiVector& w);
Integer mukai_square(const NSLattice& lattice, const MukaiVector& v);

/// Δ = v² + 2ε·v0².
Integer discriminant(const Surface& surface, const MukaiVector& v);
/// Δ = c1² − 2·r·ch2 with ch2 = χ − 2ε·r.
Integer discriminant(const Surface& surface, const NumericalSheaf& sheaf);

struct ChernData {
  Integer rank;
  IntVector c1;
  Integer c2;
};

/// Δ = 2·r·c2 − (r − 1)·c1².
Integer discriminant(const NSLattice& lattice, const ChernData& chern);

/// ch2 = (c1² − 2c2)/2, χ = ch2 + 2ε·r.
NumericalSheaf from_chern(const Surface& surface, const ChernData& chern);
ChernData to_chern(const Surface& surface, const NumericalSheaf& sheaf);

/// χ(E, F) = −⟨v(E), v(F)⟩.
Integer euler_chi(const Surface& surface, const NumericalSheaf& e, const NumericalSheaf& f);

/// v · ch(L) = (v0, v1 + v0·L, v2 + v1·L + v0·L²/2).
MukaiVector twist(const Surface& surface, const MukaiVector& v, const IntVector& line_bundle);

struct PrimitiveSplit {
  Integer multiplicity;
  MukaiVector primitive;
};

/// v = m·w with w primitive. Throws InputError for v = 0.
PrimitiveSplit primitive_part(const MukaiVector& v);
bool is_primitive(const MukaiVector& v);

std::string to_string(const MukaiVector& v);
std::string to_string(const NumericalSheaf& sheaf);
template <typename Scalar>
std::string to_string(const Vector<Scalar>& x) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) out += (i ? "," : "") + to_string(x[i]);
  return out + ")";
}

}  // namespace mukai
