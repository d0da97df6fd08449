#include "mukai/walls.hpp"

#include "mukai/short_vectors.hpp"

#include <algorithm>
#include <map>

namespace mukai {

namespace {

using WallMap = std::map<IntVector, Wall, LexLess>;

void validate_positive_rank(const Surface& surface, const MukaiVector& v) {
  if (v.c1.size() != surface.picard_rank()) throw InputError("Mukai vector c1 has the wrong length");
  if (v.rank < 2) throw DomainError("positive-rank walls need v0 >= 2 (v0 = 1 has a single chamber)");
  if (discriminant(surface, v).sign() <= 0) throw DomainError("positive-rank walls need discriminant > 0");
}

Wall xi_wall(const NSLattice& ns, const IntVector& xi) {
  IntVector normal = sign_normalized(primitive_vector(xi));
  Integer sq = square(ns, normal);
  return {normal, XiWitness{sq}};
}

// Integral functional x ↦ x·h, scaled to a primitive integer row.
IntVector functional_row(const NSLattice& ns, const RatVector& h) {
  RatVector row = ns.gram<Rational>() * h;
  return clear_denominators(row);
}

std::optional<Crossing> crossing_of(const NSLattice& ns, const Wall& wall, const RatVector& from, const RatVector& to) {
  const RatVector n = to_rational(wall.normal);
  Rational s_from = intersect(ns, n, from);
  Rational s_to = intersect(ns, n, to);
  if (s_from.sign() * s_to.sign() > 0) return std::nullopt;
  Crossing c{Rational(0), wall};
  if (s_from.is_zero() && s_to.is_zero()) {
    c.contains_segment = true;
    return c;
  }
  if (s_from.sign() < 0) {
    s_from = -s_from;
    s_to = -s_to;
  }
  c.t = s_from / (s_from - s_to);
  c.at_start = c.t.is_zero();
  c.at_end = c.t == 1;
  return c;
}

SegmentWallReport make_report(const NSLattice& ns, const RatVector& from, const RatVector& to, const WallMap& walls) {
  SegmentWallReport report{from, to, {}};
  for (const auto& [normal, wall] : walls)
    if (auto c = crossing_of(ns, wall, from, to)) report.crossings.push_back(*c);
  std::stable_sort(report.crossings.begin(), report.crossings.end(),
                   [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
  return report;
}

void validate_segment(const Surface& surface, const RatVector& from, const RatVector& to) {
  require_positive_cone(surface, from, "segment start");
  require_positive_cone(surface, to, "segment end");
  if (from == to) throw InputError("degenerate segment: endpoints are equal");
}

std::vector<Wall> values(const WallMap& walls) {
  std::vector<Wall> out;
  out.reserve(walls.size());
  for (const auto& [normal, wall] : walls) out.push_back(wall);
  return out;
}

Integer max_abs(const IntVector& x) {
  Integer m = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) m = std::max(m, abs(x[i]));
  return m;
}

}  // namespace

bool SegmentWallReport::crosses_interior() const {
  return std::any_of(crossings.begin(), crossings.end(),
                     [](const Crossing& c) { return c.contains_segment || (!c.at_start && !c.at_end); });
}

Rational wall_window(const Surface& surface, const MukaiVector& v) {
  return Rational(v.rank * v.rank * discriminant(surface, v), 4);
}

std::vector<Wall> walls_through(const Surface& surface, const RatVector& h, const MukaiVector& v) {
  validate_positive_rank(surface, v);
  require_positive_cone(surface, h, "h");
  const NSLattice& ns = surface.ns();
  if (ns.rank() == 1) return {};
  // h⊥ is negative definite by the Hodge index theorem.
  const IntMatrix basis = kernel_basis(functional_row(ns, h));
  const RatMatrix basis_q = basis.cast<Rational>();
  const RatMatrix form = -(basis_q.transpose() * ns.gram<Rational>() * basis_q);
  WallMap walls;
  for_each_short_vector(form, wall_window(surface, v), [&](const IntVector& y) {
    Wall w = xi_wall(ns, IntVector(basis * y));
    walls.emplace(w.normal, w);
  });
  return values(walls);
}

SegmentWallReport walls_on_segment(const Surface& surface, const RatVector& from, const RatVector& to,
                                   const MukaiVector& v) {
  validate_positive_rank(surface, v);
  validate_segment(surface, from, to);
  const NSLattice& ns = surface.ns();
  const Rational window = wall_window(surface, v);
  const Rational hh = square(ns, from), aa = square(ns, to), ha = intersect(ns, from, to);
  // For ξ ⊥ N with N on the segment: (ξ·H)² ≤ (−ξ²)·((H·N)²/N² − H²), and
  // H·N ≤ max(H², H·A), N² ≥ min(H², A²). The majorant
  // 2(ξ·H)²/H² − ξ² is positive definite and bounded on every candidate.
  const Rational top = std::max(hh, ha);
  Rational slack = window * (top * top / std::min(hh, aa) - hh);
  if (slack.sign() < 0) slack = 0;
  const RatVector gh = ns.gram<Rational>() * from;
  const RatMatrix majorant = Rational(2) / hh * gh * gh.transpose() - ns.gram<Rational>();
  const Rational bound = Rational(2) * slack / hh + window;

  WallMap walls;
  for_each_short_vector(majorant, bound, [&](const IntVector& xi) {
    const Integer sq = square(ns, xi);
    if (sq.sign() >= 0 || Rational(-sq) > window) return;
    const RatVector xq = to_rational(xi);
    if (intersect(ns, xq, from).sign() * intersect(ns, xq, to).sign() > 0) return;
    Wall w = xi_wall(ns, xi);
    walls.emplace(w.normal, w);
  });
  return make_report(ns, from, to, walls);
}

std::vector<Wall> rank0_wall_candidates(const Surface& surface, const MukaiVector& v, const Rank0Options& options) {
  const NSLattice& ns = surface.ns();
  if (v.c1.size() != ns.rank()) throw InputError("Mukai vector c1 has the wrong length");
  if (!v.rank.is_zero()) throw InputError("rank-zero walls need v0 = 0");
  if (is_zero(v.c1)) throw InputError("rank-zero walls need v1 != 0");
  const RatVector probe = surface.reference_ample();
  const RatVector v1 = to_rational(v.c1);
  const Rational v1_probe = intersect(ns, v1, probe);
  if (v1_probe.sign() <= 0)
    throw DomainError("v1 must pair positively with the reference ample class (effectivity proxy)");
  const Integer v1sq = square(ns, v.c1);

  WallMap walls;
  auto add = [&](const IntVector& ell, const Integer& chi_sub) {
    IntVector L(v.c1.size());
    for (Eigen::Index i = 0; i < L.size(); ++i) L[i] = chi_sub * v.c1[i] - v.v2 * ell[i];
    if (is_zero(L) || square(ns, L).sign() >= 0) return;
    IntVector normal = sign_normalized(primitive_vector(L));
    walls.emplace(normal, Wall{normal, LWitness{ell, chi_sub, L}});
  };

  if (!options.candidates.empty()) {
    for (const auto& [ell, chi_sub] : options.candidates) {
      if (ell.size() != ns.rank()) throw InputError("candidate class has the wrong length");
      add(ell, chi_sub);
    }
    return values(walls);
  }
  if (v1sq.sign() <= 0)
    throw UnsupportedError("rank-zero wall enumeration needs v1^2 > 0 or an explicit candidate list");

  const Integer box = options.box.value_or(max_abs(v.c1) + 2);
  const Eigen::Index n = ns.rank();
  IntVector ell = IntVector::Constant(n, Integer(-box));
  for (;;) {
    const Rational ell_probe = intersect(ns, to_rational(ell), probe);
    if (ell_probe.sign() > 0 && ell_probe < v1_probe && !v.v2.is_zero()) {
      // L² = v1²·χ'² − 2·v2·(v1·ℓ)·χ' + v2²·ℓ² is negative on an interval.
      const Integer b = v.v2 * intersect(ns, v.c1, ell);
      const Integer c = v.v2 * v.v2 * square(ns, ell);
      auto value = [&](const Integer& z) { return v1sq * z * z - 2 * b * z + c; };
      const Integer start = floor(Rational(b, v1sq));
      for (Integer z = start; value(z).sign() < 0; --z) add(ell, z);
      for (Integer z = start + 1; value(z).sign() < 0; ++z) add(ell, z);
    }
    Eigen::Index i = 0;
    while (i < n && ell[i] == box) ell[i++] = -box;
    if (i == n) break;
    ell[i] += 1;
  }
  return values(walls);
}

SegmentWallReport rank0_walls_on_segment(const Surface& surface, const MukaiVector& v, const RatVector& from,
                                         const RatVector& to, const Rank0Options& options) {
  validate_segment(surface, from, to);
  WallMap walls;
  for (const Wall& w : rank0_wall_candidates(surface, v, options)) walls.emplace(w.normal, w);
  return make_report(surface.ns(), from, to, walls);
}

std::vector<Wall> rank0_walls(const Surface& surface, const MukaiVector& v, const RatVector& from,
                              const RatVector& to, const Rank0Options& options) {
  std::vector<Wall> out;
  for (const Crossing& c : rank0_walls_on_segment(surface, v, from, to, options).crossings) out.push_back(c.wall);
  std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) { return lex_compare(a.normal, b.normal) < 0; });
  return out;
}

std::vector<Wall> rank0_walls_through(const Surface& surface, const MukaiVector& v, const RatVector& h,
                                      const Rank0Options& options) {
  require_positive_cone(surface, h, "h");
  std::vector<Wall> out;
  for (const Wall& w : rank0_wall_candidates(surface, v, options))
    if (intersect(surface.ns(), to_rational(w.normal), h).is_zero()) out.push_back(w);
  return out;
}

std::vector<Wall> walls_at(const Surface& surface, const RatVector& h, const MukaiVector& v) {
  if (v.rank.is_zero()) return rank0_walls_through(surface, v, h);
  require_positive_cone(surface, h, "h");
  if (v.rank == 1 || discriminant(surface, v).sign() <= 0) return {};
  return walls_through(surface, h, v);
}

bool is_general(const Surface& surface, const RatVector& h, const MukaiVector& v) {
  return walls_at(surface, h, v).empty();
}

RatVector general_neighbor(const Surface& surface, const RatVector& h, const MukaiVector& v, const RatVector& toward) {
  validate_segment(surface, h, toward);
  SegmentWallReport report;
  if (v.rank.is_zero())
    report = rank0_walls_on_segment(surface, v, h, toward);
  else if (v.rank >= 2 && discriminant(surface, v).sign() > 0)
    report = walls_on_segment(surface, h, toward, v);
  else
    report = SegmentWallReport{h, toward, {}};

  std::optional<Rational> first;
  for (const Crossing& c : report.crossings) {
    if (c.contains_segment)
      throw DomainError("no general direction: the segment toward " + to_string(toward) + " lies in the wall " +
                        to_string(c.wall.normal));
    if (c.t.sign() > 0 && (!first || c.t < *first)) first = c.t;
  }
  Rational delta = first ? *first / 2 : Rational(1);
  // δ below the first positive crossing keeps A' off every wall; the loop only
  // re-checks that postcondition.
  for (int attempt = 0; attempt < 64; ++attempt, delta /= 2) {
    RatVector candidate = h + delta * (toward - h);
    if (is_general(surface, candidate, v)) return candidate;
  }
  throw std::logic_error("general_neighbor: failed to leave the walls");
}

RatVector general_neighbor(const Surface& surface, const RatVector& h, const MukaiVector& v) {
  require_positive_cone(surface, h, "h");
  const Eigen::Index n = surface.picard_rank();
  std::optional<DomainError> last;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (int s : {1, -1}) {
      RatVector step = RatVector::Constant(n, Rational(0));
      step[k] = s;
      // Shrink the step until the endpoint stays in the positive cone.
      for (Rational scale = 1; scale > Rational(1, 1 << 20); scale /= 2) {
        RatVector toward = h + scale * step;
        if (!in_positive_cone(surface, toward)) continue;
        try {
          return general_neighbor(surface, h, v, toward);
        } catch (const DomainError& e) {
          last = e;
        }
        break;
      }
    }
  }
  if (last) throw *last;
  throw DomainError("no general direction found near " + to_string(h));
}

IntVector orthogonal_ray(const Surface& surface, const IntVector& normal) {
  if (surface.picard_rank() != 2) throw UnsupportedError("wall rays need Picard rank 2");
  const IntVector row = surface.ns().gram<Integer>() * normal;
  IntVector ray(2);
  ray << row[1], -row[0];
  ray = primitive_vector(ray);
  if (intersect(surface.ns(), to_rational(ray), surface.reference_ample()).sign() < 0) ray = -ray;
  return ray;
}

std::vector<IntVector> wall_rays(const Surface& surface, const MukaiVector& v, const RatVector& from,
                                 const RatVector& to) {
  if (surface.picard_rank() != 2) throw UnsupportedError("wall rays need Picard rank 2");
  SegmentWallReport report =
      v.rank.is_zero() ? rank0_walls_on_segment(surface, v, from, to) : walls_on_segment(surface, from, to, v);
  std::vector<IntVector> rays;
  for (const Crossing& c : report.crossings) rays.push_back(orthogonal_ray(surface, c.wall.normal));
  return rays;
}

}  // namespace mukai
