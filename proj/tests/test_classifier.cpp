#include "doctest.h"
#include "support.hpp"

#include "mukai/classifier.hpp"

#include <algorithm>

using namespace mukai;
using namespace mukai::test;

namespace {

bool cites(const ClassificationReport& r, const std::string& anchor) {
  return std::find(r.citations.begin(), r.citations.end(), anchor) != r.citations.end();
}

}  // namespace

TEST_CASE("phi values") {
  CHECK(phi(2, 0) == 2);
  CHECK(phi(2, 1) == 2);
  CHECK(phi(3, 0) == 22);
  CHECK(phi(3, 1) == 28);
  CHECK(phi(4, 0) == Rational(141, 2));
  CHECK(phi(4, 1) == Rational(173, 2));
  CHECK(phi(5, 0) == Rational(476, 3));
  CHECK(phi(5, 1) == Rational(566, 3));
  CHECK(phi(6, 0) == Rational(2690, 9));
  CHECK(phi(6, 1) == Rational(3122, 9));
  CHECK_THROWS_AS(phi(1, 0), DomainError);
  CHECK_THROWS_AS(phi(3, 2), InputError);
  for (long n = 2; n <= 12; ++n)
    for (int e = 0; e <= 1; ++e) CHECK(phi(n + 1, e) > phi(n, e));
}

TEST_CASE("one-dimensional classification") {
  const Surface s = l2();
  for (long k : {-3L, -1L, 1L, 2L, 5L}) {
    auto r = classify(s, mv(0, {1, 0}, k), rv({1, 0}));
    CHECK(r.status == ModuliStatus::SymplecticResolutionExists);
    CHECK(*r.dimension == 4);
    CHECK(cites(r, "Thm 4.2(1)"));
  }
  auto eight = classify(s, mv(0, {2, 0}, 2), rv({1, 0}));
  CHECK(eight.status == ModuliStatus::SymplecticResolutionExists);
  CHECK(eight.multiplicity == 2);
  CHECK(eight.mukai_square == 8);
  CHECK(cites(eight, "Thm 4.2(1)"));

  auto sing = classify(s, mv(0, {2, 2}, 2), rv({1, 0}));
  CHECK(sing.status == ModuliStatus::SingularTerminalisationNoResolution);
  CHECK(*sing.dimension == 2);
  CHECK(cites(sing, "Thm 4.2(2)"));
  CHECK_FALSE(sing.h_general.has_value());  // v1² = 0: walls not enumerated

  auto twisted = classify(s, mv(0, {1, 0}, 0), rv({1, 0}));
  REQUIRE(twisted.twisted.has_value());
  CHECK(*twisted.twisted == mv(0, {1, 0}, 2));
  CHECK(twisted.status == ModuliStatus::SymplecticResolutionExists);

  auto rigid = classify(s, mv(0, {1, 1}, 1), rv({1, 0}));
  CHECK(rigid.mukai_square == 0);
  auto negative = classify(s, mv(0, {1, 2}, 1), rv({1, 0}));
  CHECK_FALSE(negative.within_hypotheses);

  CHECK_THROWS_AS(classify(s, mv(0, {0, 0}, 1), rv({1, 0})), InputError);
  CHECK_THROWS_AS(classify(s, mv(0, {-1, 0}, 1), rv({1, 0})), DomainError);
  for (const auto& r : {eight, sing, twisted})
    CHECK(std::find(r.assumptions.begin(), r.assumptions.end(), "M^s_H(v) nonempty") != r.assumptions.end());
}

TEST_CASE("two-dimensional classification goldens") {
  const Surface k3 = rank_one();
  for (long n = 1; n <= 6; ++n) {
    auto r = classify(k3, MukaiVector{1, iv({0}), 1 - n}, rv({1}));
    CHECK(r.status == ModuliStatus::SymplecticResolutionExists);
    CHECK(*r.dimension == 2 * n);
    REQUIRE(r.deformation_class.has_value());
    CHECK(r.deformation_class->n == n);
    CHECK(r.h_general == true);
  }
  auto og = classify(k3, MukaiVector{2, iv({0}), -2}, rv({1}));
  CHECK(og.status == ModuliStatus::SymplecticResolutionExists);
  CHECK(og.mukai_square == 8);
  CHECK(cites(og, "Main Thm(1)"));
  CHECK(cites(og, "Thm 5.3(2b-i)"));
  CHECK_FALSE(og.deformation_class.has_value());

  auto sing = classify(k3, MukaiVector{2, iv({0}), -4}, rv({1}));
  CHECK(sing.status == ModuliStatus::SingularTerminalisationNoResolution);
  CHECK(cites(sing, "Main Thm(2)"));
  CHECK(cites(sing, "Thm 5.3(2b-ii)"));
  CHECK(sing.detail.find("codimension at least 4") != std::string::npos);
  CHECK(*sing.dimension == 18);

  auto point = classify(k3, MukaiVector{1, iv({0}), 1}, rv({1}));
  CHECK(point.status == ModuliStatus::SmoothAlready);
  CHECK(*point.dimension == 0);
  CHECK_FALSE(point.within_hypotheses);
}

TEST_CASE("non-general H on diag(2,-2)") {
  const Surface s = l2();
  auto r = classify(s, mv(2, {1, 0}, -1), rv({1, 0}));
  CHECK(r.h_general == false);
  REQUIRE(r.walls_at_h.size() == 1);
  REQUIRE(r.general_neighbor.has_value());
  CHECK(is_general(s, *r.general_neighbor, r.v));
  CHECK(r.status == ModuliStatus::SymplecticResolutionExists);
  CHECK(r.deformation_class->n == 4);
  CHECK(*r.dimension == 8);

  // m = 2, w = (2,(1,0),-3) with w² = 14 > φ(2): gate passes through φ.
  auto g = classify(s, mv(4, {2, 0}, -6), rv({1, 0}));
  CHECK(g.multiplicity == 2);
  CHECK(g.status == ModuliStatus::SingularTerminalisationNoResolution);
  CHECK(cites(g, "Thm 6.5"));

  // m = 3, w = (3,(1,0),0), w² = 2 ≤ φ(3), H on a wall: unverified.
  auto u = classify(s, mv(9, {3, 0}, 0), rv({1, 0}));
  CHECK(u.h_general == false);
  CHECK(u.status == ModuliStatus::ConditionUnverified);
  CHECK(cites(u, "Thm 5.3(3)"));
}

TEST_CASE("existence gate") {
  const Surface s = l2();
  auto a = existence_gate(s, mv(2, {1, 0}, -3), rv({1, 0}));
  CHECK(a.guaranteed);
  CHECK(a.reason.find("phi") != std::string::npos);
  CHECK(existence_gate(s, mv(1, {5, 3}, 7), rv({1, 0})).guaranteed);
  auto c = existence_gate(s, mv(3, {1, 0}, 0), rv({1, 0}));
  CHECK_FALSE(c.guaranteed);
  CHECK(c.reason.find("gate unestablished") != std::string::npos);
  CHECK(existence_gate(s, mv(3, {1, 0}, 0), rv({7, 1})).guaranteed);  // (7,1) is w-general
  CHECK_THROWS_AS(existence_gate(s, mv(2, {2, 0}, -2), rv({1, 0})), InputError);
}

TEST_CASE("deformation class") {
  const Surface s = l2();
  auto d = deformation_class(s, mv(2, {1, 0}, -3), rv({1, 0}), rv({7, 1}));
  REQUIRE(d.hilb.has_value());
  CHECK(d.hilb->n == 8);
  CHECK(deformation_class(rank_one(), MukaiVector{1, iv({0}), -4}, rv({1}), rv({1})).hilb->n == 5);
  CHECK_FALSE(deformation_class(l2(SurfaceKind::Abelian), mv(2, {1, 0}, -3), rv({1, 0}), rv({7, 1})).hilb);
  CHECK_THROWS_AS(deformation_class(s, mv(2, {1, 0}, -3), rv({1, 0}), rv({1, 0})), DomainError);
}

TEST_CASE("reports are invariant under a change of lattice basis") {
  // g ↦ Uᵀ g U with U unimodular; classes transform by U⁻¹.
  Gen gen(55);
  const IntMatrix g = gram({{2, 0}, {0, -2}});
  IntMatrix u(2, 2);
  u << 2, 1, 1, 1;  // det 1
  IntMatrix u_inv(2, 2);
  u_inv << 1, -1, -1, 2;
  const NSLattice base(g);
  const NSLattice moved(IntMatrix(u.transpose() * g * u));
  for (int k = 0; k < 60; ++k) {
    const Surface s1(k % 2 ? SurfaceKind::K3 : SurfaceKind::Abelian, base, rv({1, 0}));
    const Surface s2(s1.kind(), moved, to_rational(IntVector(u_inv * iv({1, 0}))));
    const MukaiVector v{gen.range(0, 4), gen.vec(2, 3), gen.range(-4, 3)};
    if (is_zero(v)) continue;
    if (v.rank.is_zero() && (is_zero(v.c1) || intersect(base, v.c1, iv({1, 0})).sign() <= 0)) continue;
    const IntVector h = gen.cone_point(base, rv({1, 0}), 4);
    const MukaiVector v2{v.rank, IntVector(u_inv * v.c1), v.v2};
    const RatVector h2 = to_rational(IntVector(u_inv * h));
    ClassificationReport a, b;
    try {
      a = classify(s1, v, to_rational(h));
    } catch (const std::exception&) {
      CHECK_THROWS(classify(s2, v2, h2));
      continue;
    }
    b = classify(s2, v2, h2);
    CHECK(a.status == b.status);
    CHECK(a.dimension == b.dimension);
    CHECK(a.h_general == b.h_general);
    CHECK(a.citations == b.citations);
    CHECK(a.multiplicity == b.multiplicity);
    if (a.dimension && a.within_hypotheses) CHECK(*a.dimension == 2 + a.mukai_square);
  }
}
