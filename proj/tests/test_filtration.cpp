#include "doctest.h"
#include "support.hpp"

#include "mukai/filtration.hpp"

using namespace mukai;
using namespace mukai::test;

TEST_CASE("worked example on diag(2,-2)") {
  const Surface s = l2();
  auto r = filtration_checks(s, {ns(1, {0, 1}, 1), ns(1, {0, -1}, 1)}, rv({1, 0}));
  CHECK(r.defect_lhs == -4);
  CHECK(r.defect_rhs == -4);
  CHECK(r.equal_h_slope);
  CHECK(r.distinct_c1_over_r);
  REQUIRE(r.chi_bound.has_value());
  CHECK(r.chi_bound->value == -2);
  CHECK(r.chi_bound->bound == Rational(-1, 2));
  CHECK(r.chi_bound->satisfied);
  REQUIRE(r.delta_lcm_bound.has_value());
  CHECK(r.delta_lcm_bound->value == 0);
  CHECK(r.delta_lcm_bound->bound == 3);
  CHECK(r.delta_simple_bound->bound == 3);
  REQUIRE(r.rank2.has_value());
  CHECK(r.rank2->c1_difference_square == -8);
  CHECK(r.rank2->pairing == 2);
  CHECK_FALSE(r.rank2->holds);
}

TEST_CASE("rank-2 identity when the pieces pair to 1") {
  const Surface s = l2();
  // v' = (1,(0,1),1), v'' = (1,(0,-1),0): ⟨v',v''⟩ = 1.
  auto r = filtration_checks(s, {ns(1, {0, 1}, 2), ns(1, {0, -1}, 1)}, rv({1, 0}));
  REQUIRE(r.rank2.has_value());
  CHECK(r.rank2->pairing == 1);
  CHECK(r.rank2->holds);
  CHECK(r.rank2->c1_difference_square == -8);
  CHECK(r.rank2->v_square_minus_4 == -8);
  CHECK(r.rank2->hodge_sign);
}

TEST_CASE("degenerate filtrations") {
  const Surface s = l2();
  auto one = filtration_checks(s, {ns(2, {1, 0}, 1)}, rv({1, 0}));
  CHECK(one.defect_lhs == 0);
  CHECK(one.defect_rhs == 0);
  auto prop = filtration_checks(s, {ns(1, {1, 0}, 1), ns(2, {2, 0}, 2)}, rv({1, 0}));
  CHECK(prop.defect_rhs == 0);
  CHECK_FALSE(prop.distinct_c1_over_r);
  CHECK_FALSE(prop.delta_lcm_bound.has_value());
  auto slopes = filtration_checks(s, {ns(1, {1, 0}, 1), ns(1, {0, 0}, 2)}, rv({1, 0}));
  CHECK_FALSE(slopes.equal_h_slope);
  CHECK_FALSE(slopes.delta_bound.has_value());
  CHECK_THROWS_AS(filtration_checks(s, {ns(0, {1, 0}, 1)}, rv({1, 0})), InputError);
  CHECK_THROWS_AS(filtration_checks(s, {}, rv({1, 0})), InputError);
}

TEST_CASE("defect identity on random filtrations") {
  Gen gen(8);
  const Surface surfaces[] = {l2(), l2(SurfaceKind::Abelian),
                              Surface(SurfaceKind::K3, NSLattice(gram({{2, 1, 0}, {1, -2, 0}, {0, 0, -4}})),
                                      rv({1, 0, 0}))};
  for (int k = 0; k < 200; ++k) {
    const Surface& s = surfaces[k % 3];
    std::vector<NumericalSheaf> gr;
    const long n = gen.range(1, 4);
    for (long i = 0; i < n; ++i) gr.push_back({gen.range(1, 5), gen.vec(s.picard_rank(), 10), gen.range(-10, 10)});
    auto r = filtration_checks(s, gr, s.reference_ample());
    CHECK(r.defect_lhs == r.defect_rhs);
  }
}

TEST_CASE("bounds hold on random filtrations satisfying the hypotheses") {
  Gen gen(21);
  const Surface surfaces[] = {l2(), l2(SurfaceKind::Abelian),
                              Surface(SurfaceKind::K3, NSLattice(gram({{2, 1, 0}, {1, -2, 0}, {0, 0, -4}})),
                                      rv({1, 0, 0}))};
  for (int k = 0; k < 200; ++k) {
    const Surface& s = surfaces[k % 3];
    const IntVector h = to_integer(s.reference_ample());
    auto gr = slope_filtration(gen, s, h, gen.range(2, 4), 5, 10);
    auto r = filtration_checks(s, gr, to_rational(h));
    REQUIRE(r.equal_h_slope);
    REQUIRE(r.distinct_c1_over_r);
    REQUIRE(r.deltas_nonnegative);
    CHECK(r.delta_bound->satisfied);
    CHECK(r.delta_lcm_bound->satisfied);
    CHECK(r.delta_simple_bound->satisfied);
    REQUIRE(r.chi_bound.has_value());
    CHECK(r.chi_bound->satisfied);
  }
}
