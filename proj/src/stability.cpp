#include "mukai/stability.hpp"

namespace mukai {

namespace {

void require_positive_rank(const NumericalSheaf& e, const char* what) {
  if (e.rank.sign() <= 0) throw InputError(std::string(what) + " must have positive rank");
}

}  // namespace

HilbertPolynomials hilbert2(const Surface& surface, const NumericalSheaf& e, const RatVector& h, const RatVector& a) {
  require_positive_rank(e, "sheaf");
  require_positive_cone(surface, h, "H");
  require_positive_cone(surface, a, "A");
  const NSLattice& ns = surface.ns();
  const Rational r = e.rank;
  // c1(E) − (r/2)·K_X
  const RatVector twist_class = to_rational(e.c1) - r / 2 * surface.canonical();
  const Rational hh = square(ns, h);
  Poly2 p;
  p.set(2, 0, r / 2 * hh);
  p.set(1, 1, r * intersect(ns, h, a));
  p.set(0, 2, r / 2 * square(ns, a));
  p.set(1, 0, intersect(ns, twist_class, h));
  p.set(0, 1, intersect(ns, twist_class, a));
  p.set(0, 0, Rational(e.chi));
  Poly2 reduced = Rational(1) / (r * hh) * p;
  return {std::move(p), std::move(reduced)};
}

Poly1 chi_twist_poly(const Surface& surface, const NumericalSheaf& e, const Integer& m, const RatVector& h,
                     const RatVector& a) {
  require_positive_rank(e, "sheaf");
  const NSLattice& ns = surface.ns();
  const Rational r = e.rank;
  const RatVector mh = Rational(m) * h;
  const RatVector twist_class = to_rational(e.c1) / r - surface.canonical() / 2;
  // χ(E(L))/r = L²/2 + (c1/r − K/2)·L + χ/r with L = mH + zA.
  return Poly1({square(ns, mh) / 2 + intersect(ns, twist_class, mh) + Rational(e.chi) / r,
                intersect(ns, mh, a) + intersect(ns, twist_class, a), square(ns, a) / 2});
}

std::strong_ordering chi_twist_cmp(const Surface& surface, const NumericalSheaf& sub, const NumericalSheaf& f,
                                   const Integer& m, const RatVector& h, const RatVector& a) {
  return cmp_lex(chi_twist_poly(surface, sub, m, h, a), chi_twist_poly(surface, f, m, h, a));
}

Rational slope(const Surface& surface, const NumericalSheaf& e, const RatVector& x) {
  require_positive_rank(e, "sheaf");
  return intersect(surface.ns(), to_rational(e.c1), x) / Rational(e.rank);
}

std::strong_ordering operator<=>(const SlopeTriple& a, const SlopeTriple& b) {
  if (auto c = compare(a.mu_h, b.mu_h); c != 0) return c;
  if (auto c = compare(a.chi_over_rank, b.chi_over_rank); c != 0) return c;
  return compare(a.neg_mu_a, b.neg_mu_a);
}

SlopeTriple slope_triple(const Surface& surface, const NumericalSheaf& e, const RatVector& h, const RatVector& a) {
  return {slope(surface, e, h), Rational(e.chi) / Rational(e.rank), -slope(surface, e, a)};
}

std::strong_ordering slope_triple_cmp(const Surface& surface, const NumericalSheaf& first,
                                      const NumericalSheaf& second, const RatVector& h, const RatVector& a) {
  return slope_triple(surface, first, h, a) <=> slope_triple(surface, second, h, a);
}

std::string to_string(StabilityLabel label) {
  switch (label) {
    case StabilityLabel::HUnstable: return "H-unstable";
    case StabilityLabel::HSemistableOnly: return "H-semistable-only";
    case StabilityLabel::HASemistableOnly: return "(H,A)-semistable-only";
    case StabilityLabel::HAStableNotHStable: return "(H,A)-stable-not-H-stable";
    case StabilityLabel::HStable: return "H-stable";
  }
  return "?";
}

StabilityVerdict classify_destab(const Surface& surface, const NumericalSheaf& f,
                                 const std::vector<NumericalSheaf>& subs, const RatVector& h, const RatVector& a) {
  require_positive_rank(f, "F");
  require_positive_cone(surface, h, "H");
  require_positive_cone(surface, a, "A");
  StabilityVerdict verdict;
  const SlopeTriple tf = slope_triple(surface, f, h, a);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const NumericalSheaf& e = subs[i];
    if (e.c1.size() != surface.picard_rank()) {
      verdict.rejected.push_back({i, "c1 has the wrong length"});
      continue;
    }
    if (e.rank.sign() <= 0 || e.rank >= f.rank) {
      verdict.rejected.push_back({i, "rank " + to_string(e.rank) + " outside 0 < rk E < " + to_string(f.rank)});
      continue;
    }
    const SlopeTriple te = slope_triple(surface, e, h, a);
    // p_H compares the first two entries.
    auto h_order = compare(te.mu_h, tf.mu_h);
    if (h_order == 0) h_order = compare(te.chi_over_rank, tf.chi_over_rank);
    if (h_order > 0) {
      verdict.h_destabilizing.push_back(i);
      continue;
    }
    if (h_order < 0) continue;
    verdict.h_equal.push_back(i);
    auto ha_order = compare(te.neg_mu_a, tf.neg_mu_a);
    if (ha_order > 0) verdict.ha_destabilizing.push_back(i);
    if (ha_order == 0) verdict.ha_equal.push_back(i);
  }
  if (!verdict.h_destabilizing.empty())
    verdict.label = StabilityLabel::HUnstable;
  else if (!verdict.ha_destabilizing.empty())
    verdict.label = StabilityLabel::HSemistableOnly;
  else if (!verdict.ha_equal.empty())
    verdict.label = StabilityLabel::HASemistableOnly;
  else if (!verdict.h_equal.empty())
    verdict.label = StabilityLabel::HAStableNotHStable;
  else
    verdict.label = StabilityLabel::HStable;
  return verdict;
}

Rational dim1_functional(const Surface& surface, const NumericalSheaf& sub, const NumericalSheaf& f,
                         const RatVector& h) {
  if (sub.dim() != 1 || f.dim() != 1)
    throw InputError("dim1_functional needs one-dimensional sheaves (rank 0, c1 != 0)");
  const IntVector l = sub.chi * f.c1 - f.chi * sub.c1;
  return intersect(surface.ns(), to_rational(l), h);
}

}  // namespace mukai
