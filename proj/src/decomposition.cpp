#include "mukai/decomposition.hpp"

#include <algorithm>
#include <functional>

namespace mukai {

namespace {

Integer chi_of(const Surface& surface, const MukaiVector& v) { return v.v2 + surface.epsilon() * v.rank; }

// Every integer vector with entries in [-b, b], as a flat odometer.
template <typename Visit>
void box_scan(Eigen::Index n, const Integer& b, Visit&& visit) {
  IntVector x = IntVector::Constant(n, Integer(-b));
  if (n == 0) {
    visit(x);
    return;
  }
  while (true) {
    visit(x);
    Eigen::Index i = 0;
    while (i < n && x[i] == b) x[i++] = -b;
    if (i == n) return;
    ++x[i];
  }
}

}  // namespace

bool admissible_part(const Surface& surface, const MukaiVector& v, const RatVector& h, const MukaiVector& w) {
  const NSLattice& ns = surface.ns();
  if (w.c1.size() != surface.picard_rank() || is_zero(w)) return false;
  if (mukai_square(ns, w) < -2) return false;
  if (v.rank.sign() > 0) {
    if (w.rank.sign() <= 0) return false;
    // w1·H/w0 = v1·H/v0 and w2/w0 = v2/v0, cross-multiplied.
    if (Rational(v.rank) * intersect(ns, to_rational(w.c1), h) != Rational(w.rank) * intersect(ns, to_rational(v.c1), h))
      return false;
    return w.v2 * v.rank == v.v2 * w.rank;
  }
  if (!w.rank.is_zero()) return false;
  if (intersect(ns, to_rational(w.c1), surface.reference_ample()).sign() <= 0) return false;
  const IntVector l = chi_of(surface, w) * v.c1 - chi_of(surface, v) * w.c1;
  return intersect(ns, to_rational(l), h).is_zero();
}

std::vector<DecompositionCandidate> enumerate_decompositions(const Surface& surface, const MukaiVector& v,
                                                             const RatVector& h, const DecompositionBounds& bounds) {
  if (is_zero(v)) throw InputError("v must be nonzero");
  if (v.rank.sign() < 0) throw InputError("v0 must be nonnegative");
  if (v.c1.size() != surface.picard_rank()) throw InputError("v1 has the wrong length");
  if (bounds.max_abs.sign() < 0) throw InputError("bounds must be nonnegative");
  require_positive_cone(surface, h, "H");
  const RatVector& ref = surface.reference_ample();
  const NSLattice& ns = surface.ns();
  if (v.rank.is_zero() && intersect(ns, to_rational(v.c1), ref).sign() <= 0)
    throw DomainError("v1 must pair positively with the reference ample class");

  // Parts, filtered and lexicographically sorted.
  std::vector<MukaiVector> parts;
  const Eigen::Index rho = surface.picard_rank();
  const Integer lo_rank = v.rank.sign() > 0 ? Integer(1) : Integer(0);
  const Integer hi_rank = std::min(v.rank, bounds.max_abs);
  for (Integer r = lo_rank; r <= hi_rank; ++r) {
    box_scan(rho, bounds.max_abs, [&](const IntVector& c1) {
      for (Integer v2 = -bounds.max_abs; v2 <= bounds.max_abs; ++v2) {
        MukaiVector w{r, c1, v2};
        if (admissible_part(surface, v, h, w)) parts.push_back(std::move(w));
      }
    });
  }
  std::sort(parts.begin(), parts.end(), [](const MukaiVector& a, const MukaiVector& b) { return lex_compare(a, b) < 0; });

  // Positive measure that every part strictly consumes.
  auto measure = [&](const MukaiVector& w) -> Rational {
    return v.rank.sign() > 0 ? Rational(w.rank) : intersect(ns, to_rational(w.c1), ref);
  };

  std::vector<DecompositionCandidate> out;
  std::vector<DecompositionPart> chosen;
  std::function<void(std::size_t, const MukaiVector&)> search = [&](std::size_t from, const MukaiVector& rest) {
    if (is_zero(rest)) {
      DecompositionCandidate d{chosen, false};
      d.trivial = chosen.size() == 1 && chosen.front().n == 1;
      out.push_back(std::move(d));
      return;
    }
    const Rational budget = measure(rest);
    if (budget.sign() <= 0) return;
    for (std::size_t i = from; i < parts.size(); ++i) {
      const MukaiVector& w = parts[i];
      const Rational step = measure(w);
      MukaiVector left = rest;
      Integer n = 0;
      for (Rational used = step; used <= budget; used += step) {
        ++n;
        left = left + Integer(-1) * w;
        chosen.push_back({n, w});
        search(i + 1, left);
        chosen.pop_back();
      }
    }
  };
  const MukaiVector start = v;
  search(0, start);

  std::sort(out.begin(), out.end(), [](const DecompositionCandidate& a, const DecompositionCandidate& b) {
    const std::size_t k = std::min(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (auto c = lex_compare(a.parts[i].v, b.parts[i].v); c != 0) return c < 0;
      if (a.parts[i].n != b.parts[i].n) return a.parts[i].n < b.parts[i].n;
    }
    return a.parts.size() < b.parts.size();
  });
  return out;
}

std::string to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::Point: return "point";
    case FactorKind::Hilbert: return "Hilb";
    case FactorKind::Symmetric: return "Sym";
  }
  return "?";
}

TerminalisationShape terminalisation_shape(const Surface& surface, const DecompositionCandidate& d,
                                           const RatVector& h) {
  if (d.parts.empty()) throw InputError("decomposition has no parts");
  TerminalisationShape shape;
  shape.dimension = 0;
  bool all_smooth = true;
  bool singular = false;
  bool unverified = false;
  for (const DecompositionPart& part : d.parts) {
    if (part.n.sign() <= 0) throw InputError("part multiplicities must be positive");
    const Integer square = mukai_square(surface.ns(), part.v);
    ShapeFactor factor{FactorKind::Point, part.n, part.v, Integer(0), std::nullopt};
    if (square.sign() < 0) {
      if (square < -2) throw DomainError("part " + to_string(part.v) + " has v^2 < -2");
      shape.factors.push_back(factor);
      continue;
    }
    const ClassificationReport sub = classify(surface, part.v, h);
    factor.part_status = sub.status;
    const bool part_smooth = sub.status == ModuliStatus::SymplecticResolutionExists ||
                             sub.status == ModuliStatus::SmoothAlready;
    if (sub.status == ModuliStatus::ConditionUnverified) unverified = true;
    if (sub.status == ModuliStatus::SingularTerminalisationNoResolution) singular = true;
    all_smooth = all_smooth && part_smooth;
    if (square.is_zero()) {
      factor.kind = FactorKind::Hilbert;
      factor.dimension = 2 * part.n;
    } else {
      factor.kind = FactorKind::Symmetric;
      factor.dimension = part.n * (2 + square);
      if (part.n > 1) singular = true;
    }
    shape.dimension += factor.dimension;
    shape.factors.push_back(std::move(factor));
  }
  if (unverified) {
    shape.status = ModuliStatus::ConditionUnverified;
  } else if (singular) {
    shape.status = ModuliStatus::SingularTerminalisationNoResolution;
    shape.citations.push_back("Thm 3.2(2)");
  } else {
    shape.smooth = all_smooth;
    shape.status = ModuliStatus::SymplecticResolutionExists;
    shape.citations.push_back("Thm 3.2(1)");
  }
  return shape;
}

std::string to_string(const DecompositionCandidate& d) {
  std::string out;
  for (const DecompositionPart& p : d.parts) {
    if (!out.empty()) out += " + ";
    out += to_string(p.n) + "*" + to_string(p.v);
  }
  return out;
}

}  // namespace mukai
