#include "mukai/mukai_vector.hpp"

namespace mukai {

bool operator==(const MukaiVector& a, const MukaiVector& b) {
  return a.rank == b.rank && a.v2 == b.v2 && a.c1.size() == b.c1.size() && a.c1 == b.c1;
}

std::strong_ordering lex_compare(const MukaiVector& a, const MukaiVector& b) {
  if (auto c = compare(a.rank, b.rank); c != 0) return c;
  if (auto c = lex_compare(a.c1, b.c1); c != 0) return c;
  return compare(a.v2, b.v2);
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
  if (a.c1.size() != b.c1.size()) throw InputError("Mukai vectors over different lattices");
  return {a.rank + b.rank, a.c1 + b.c1, a.v2 + b.v2};
}

MukaiVector operator*(const Integer& m, const MukaiVector& v) {
  IntVector c1 = v.c1;
  for (Eigen::Index i = 0; i < c1.size(); ++i) c1[i] *= m;
  return {m * v.rank, c1, m * v.v2};
}

bool is_zero(const MukaiVector& v) { return v.rank.is_zero() && v.v2.is_zero() && is_zero(v.c1); }

int NumericalSheaf::dim() const {
  if (rank.sign() > 0) return 2;
  return is_zero(c1) ? 0 : 1;
}

NumericalSheaf operator+(const NumericalSheaf& a, const NumericalSheaf& b) {
  if (a.c1.size() != b.c1.size()) throw InputError("sheaves over different lattices");
  return {a.rank + b.rank, a.c1 + b.c1, a.chi + b.chi};
}

MukaiVector mukai_vector(const Surface& surface, const NumericalSheaf& sheaf) {
  return {sheaf.rank, sheaf.c1, sheaf.chi - surface.epsilon() * sheaf.rank};
}

NumericalSheaf numerical_sheaf(const Surface& surface, const MukaiVector& v) {
  return {v.rank, v.c1, v.v2 + surface.epsilon() * v.rank};
}

Integer mukai_pair(const NSLattice& lattice, const MukaiVector& v, const MukaiVector& w) {
  return intersect(lattice, v.c1, w.c1) - v.rank * w.v2 - w.rank * v.v2;
}

Integer mukai_square(const NSLattice& lattice, const MukaiVector& v) { return mukai_pair(lattice, v, v); }

Integer discriminant(const Surface& surface, const MukaiVector& v) {
  return mukai_square(surface.ns(), v) + 2 * surface.epsilon() * v.rank * v.rank;
}

Integer discriminant(const Surface& surface, const NumericalSheaf& sheaf) {
  const Integer ch2 = sheaf.chi - 2 * surface.epsilon() * sheaf.rank;
  return square(surface.ns(), sheaf.c1) - 2 * sheaf.rank * ch2;
}

Integer discriminant(const NSLattice& lattice, const ChernData& chern) {
  return 2 * chern.rank * chern.c2 - (chern.rank - 1) * square(lattice, chern.c1);
}

NumericalSheaf from_chern(const Surface& surface, const ChernData& chern) {
  const Integer twice_ch2 = square(surface.ns(), chern.c1) - 2 * chern.c2;
  if (mp::abs(twice_ch2) % 2 != 0) throw InputError("c1² − 2c2 must be even");
  return {chern.rank, chern.c1, twice_ch2 / 2 + 2 * surface.epsilon() * chern.rank};
}

ChernData to_chern(const Surface& surface, const NumericalSheaf& sheaf) {
  const Integer ch2 = sheaf.chi - 2 * surface.epsilon() * sheaf.rank;
  const Integer twice_c2 = square(surface.ns(), sheaf.c1) - 2 * ch2;
  // c1² is even on an even lattice.
  return {sheaf.rank, sheaf.c1, twice_c2 / 2};
}

Integer euler_chi(const Surface& surface, const NumericalSheaf& e, const NumericalSheaf& f) {
  return -mukai_pair(surface.ns(), mukai_vector(surface, e), mukai_vector(surface, f));
}

MukaiVector twist(const Surface& surface, const MukaiVector& v, const IntVector& line_bundle) {
  const NSLattice& ns = surface.ns();
  const Integer l2 = square(ns, line_bundle);
  const Integer top = v.rank * l2;
  if (mp::abs(top) % 2 != 0) throw std::logic_error("twist produced a non-integral Mukai vector");
  IntVector c1 = v.c1;
  for (Eigen::Index i = 0; i < c1.size(); ++i) c1[i] += v.rank * line_bundle[i];
  return {v.rank, c1, v.v2 + intersect(ns, v.c1, line_bundle) + top / 2};
}

PrimitiveSplit primitive_part(const MukaiVector& v) {
  if (is_zero(v)) throw InputError("the zero Mukai vector has no primitive part");
  Integer g = gcd(gcd(v.rank, v.v2), content(v.c1));
  IntVector c1 = v.c1;
  for (Eigen::Index i = 0; i < c1.size(); ++i) c1[i] /= g;
  return {g, {v.rank / g, c1, v.v2 / g}};
}

bool is_primitive(const MukaiVector& v) { return primitive_part(v).multiplicity == 1; }

std::string to_string(const MukaiVector& v) {
  return "(" + to_string(v.rank) + "," + to_string(v.c1) + "," + to_string(v.v2) + ")";
}

std::string to_string(const NumericalSheaf& sheaf) {
  return "[r=" + to_string(sheaf.rank) + ",c1=" + to_string(sheaf.c1) + ",chi=" + to_string(sheaf.chi) + "]";
}

}  // namespace mukai
