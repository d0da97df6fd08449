#include "mukai/filtration.hpp"

namespace mukai {

FiltrationReport filtration_checks(const Surface& surface, const std::vector<NumericalSheaf>& graded,
                                   const RatVector& h) {
  if (graded.empty()) throw InputError("filtration needs at least one graded piece");
  require_positive_cone(surface, h, "H");
  const NSLattice& ns = surface.ns();
  for (std::size_t i = 0; i < graded.size(); ++i) {
    if (graded[i].rank.sign() <= 0) throw InputError("graded piece " + std::to_string(i) + " must have positive rank");
    if (graded[i].c1.size() != surface.picard_rank())
      throw InputError("graded piece " + std::to_string(i) + " has c1 of the wrong length");
  }

  FiltrationReport report;
  report.total = graded.front();
  for (std::size_t i = 1; i < graded.size(); ++i) report.total = report.total + graded[i];
  const std::size_t n = graded.size();
  const Rational r = report.total.rank;
  const Rational delta_f = discriminant(surface, report.total);

  std::vector<Rational> ranks;
  std::vector<RatVector> normalized;
  std::vector<Rational> deltas;
  for (const NumericalSheaf& g : graded) {
    ranks.emplace_back(g.rank);
    normalized.push_back(to_rational(g.c1) / Rational(g.rank));
    deltas.emplace_back(discriminant(surface, g));
  }

  Rational delta_sum = 0;
  for (std::size_t i = 0; i < n; ++i) delta_sum += deltas[i] / ranks[i];
  report.defect_lhs = delta_sum - delta_f / r;

  report.defect_rhs = 0;
  report.distinct_c1_over_r = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RatVector diff = normalized[i] - normalized[j];
      report.defect_rhs += ranks[i] * ranks[j] / r * square(ns, diff);
      if (is_zero(diff)) report.distinct_c1_over_r = false;
    }
  if (report.defect_lhs != report.defect_rhs)
    throw std::logic_error("filtration defect identity failed: " + to_string(report.defect_lhs) +
                           " != " + to_string(report.defect_rhs));

  report.equal_h_slope = true;
  const Rational mu0 = intersect(ns, normalized[0], h);
  for (std::size_t i = 1; i < n; ++i)
    if (intersect(ns, normalized[i], h) != mu0) report.equal_h_slope = false;
  report.deltas_nonnegative = true;
  for (const Rational& d : deltas)
    if (d.sign() < 0) report.deltas_nonnegative = false;

  if (!report.equal_h_slope) {
    report.notes.push_back("hypotheses unmet: graded pieces have different H-slopes");
  } else {
    report.delta_bound = BoundCheck{delta_sum, delta_f / r, delta_sum <= delta_f / r};
    if (!report.distinct_c1_over_r) {
      report.notes.push_back("hypotheses unmet: two graded pieces share c1/r");
    } else {
      Rational lcm_term = 0;
      Rational simple_term = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const Rational l = lcm(graded[i].rank, graded[j].rank);
          lcm_term += 2 * ranks[i] * ranks[j] / (r * l * l);
          simple_term += 2 / (r * ranks[i] * ranks[j]);
        }
      const Rational lcm_bound = delta_f / r - lcm_term;
      const Rational simple_bound = delta_f / r - simple_term;
      report.delta_lcm_bound = BoundCheck{delta_sum, lcm_bound, delta_sum <= lcm_bound};
      report.delta_simple_bound = BoundCheck{delta_sum, simple_bound, delta_sum <= simple_bound};

      if (n >= 2 && report.deltas_nonnegative) {
        const Rational eps = surface.epsilon();
        Rational chi_sum = 0;
        Rational inverse_products = 0;
        Rational rank_squares = 0;
        for (std::size_t i = 0; i < n; ++i) {
          rank_squares += ranks[i] * ranks[i];
          for (std::size_t j = i + 1; j < n; ++j) {
            chi_sum += Rational(euler_chi(surface, graded[i], graded[j]));
            inverse_products += 1 / (ranks[i] * ranks[j]);
          }
        }
        const Rational nn = static_cast<long>(n);
        const Rational bound = -delta_f / (2 * r) * (nn - 1) + eps * r * r - eps * rank_squares -
                               (r - nn + 1) / r * inverse_products;
        report.chi_bound = BoundCheck{chi_sum, bound, chi_sum <= bound};
      } else if (n >= 2) {
        report.notes.push_back("hypotheses unmet: some graded piece has negative discriminant");
      }
    }
  }

  if (n == 2 && graded[0].rank == 1 && graded[1].rank == 1) {
    const MukaiVector v1 = mukai_vector(surface, graded[0]);
    const MukaiVector v2 = mukai_vector(surface, graded[1]);
    const Integer v_square = mukai_square(ns, mukai_vector(surface, report.total));
    Rank2Identity id;
    id.c1_difference_square = square(ns, IntVector(graded[0].c1 - graded[1].c1));
    id.v_square_minus_4 = v_square - 4;
    id.parts_sum = mukai_square(ns, v1) + mukai_square(ns, v2) - 2;
    id.pairing = mukai_pair(ns, v1, v2);
    id.holds = id.c1_difference_square == id.v_square_minus_4 && id.v_square_minus_4 == id.parts_sum;
    id.hodge_sign = id.v_square_minus_4.sign() <= 0;
    report.rank2 = id;
    report.notes.push_back(
        "the v^2 = 2 exceptional rank-2 case would need a (-2)-class D with D.H = 0, which no ample H admits");
  }
  return report;
}

}  // namespace mukai
