#include "doctest.h"
#include "support.hpp"

#include "mukai/walls.hpp"
#include "mukai_oracle/brute_force.hpp"

using namespace mukai;
using namespace mukai::test;

namespace {

oracle::NormalSet normals(const std::vector<Wall>& walls) {
  oracle::NormalSet out;
  for (const Wall& w : walls) {
    std::vector<long> x;
    for (Eigen::Index i = 0; i < w.normal.size(); ++i) x.push_back(w.normal[i].convert_to<long>());
    out.insert(x);
  }
  return out;
}

std::map<std::vector<long>, Rational> crossings(const SegmentWallReport& r) {
  std::map<std::vector<long>, Rational> out;
  for (const Crossing& c : r.crossings) {
    std::vector<long> x;
    for (Eigen::Index i = 0; i < c.wall.normal.size(); ++i) x.push_back(c.wall.normal[i].convert_to<long>());
    out[x] = c.t;
  }
  return out;
}

const MukaiVector kV = mv(2, {1, 0}, -1);

}  // namespace

TEST_CASE("walls through a point on diag(2,-2)") {
  const Surface s = l2();
  auto at_h = walls_through(s, rv({1, 0}), kV);
  REQUIRE(at_h.size() == 1);
  CHECK(at_h[0].normal == iv({0, 1}));
  CHECK(std::get<XiWitness>(at_h[0].witness).xi_square == -2);
  CHECK(walls_through(s, rv({3, 1}), kV).empty());
  CHECK(normals(at_h) == oracle::walls_through(s, rv({1, 0}), kV, 50));
  CHECK(oracle::walls_through(s, rv({3, 1}), kV, 50).empty());
}

TEST_CASE("walls through: preconditions") {
  const Surface s = l2();
  CHECK_THROWS_AS(walls_through(s, rv({1, 0}), mv(1, {0, 0}, 0)), DomainError);
  CHECK_THROWS_AS(walls_through(s, rv({0, 1}), kV), InputError);
  CHECK_THROWS_AS(walls_through(l2(SurfaceKind::Abelian), rv({1, 0}), mv(2, {0, 0}, 1)), DomainError);  // Δ < 0
  CHECK(walls_through(rank_one(), rv({1}), MukaiVector{3, iv({1}), -4}).empty());
}

TEST_CASE("walls on a segment") {
  const Surface s = l2();
  auto r = walls_on_segment(s, rv({1, 0}), rv({3, 1}), kV);
  REQUIRE(r.crossings.size() == 1);
  CHECK(r.crossings[0].t == 0);
  CHECK(r.crossings[0].at_start);
  CHECK(r.crossings[0].wall.normal == iv({0, 1}));
  CHECK_FALSE(r.crosses_interior());

  auto e = walls_on_segment(s, rv({1, 0}), rv({3, 2}), kV);
  bool found_end = false;
  for (const Crossing& c : e.crossings)
    if (c.wall.normal == iv({2, 3})) {
      CHECK(c.t == 1);
      CHECK(c.at_end);
      found_end = true;
    }
  CHECK(found_end);

  // Inside one chamber: slopes strictly between 0 and 1/2.
  CHECK(walls_on_segment(s, rv({3, 1}), rv({5, 2}), kV).crossings.empty());
  CHECK_THROWS_AS(walls_on_segment(s, rv({3, 1}), rv({3, 1}), kV), InputError);
}

TEST_CASE("seven wall rays across the cone") {
  const Surface s = l2();
  auto rays = wall_rays(s, kV, rv({5, 4}), rv({5, -4}));
  std::set<std::vector<long>> got;
  for (const IntVector& ray : rays) got.insert({ray[0].convert_to<long>(), ray[1].convert_to<long>()});
  const std::set<std::vector<long>> expected{{1, 0}, {2, 1}, {2, -1}, {3, 2}, {3, -2}, {4, 3}, {4, -3}};
  CHECK(got == expected);
  auto report = walls_on_segment(s, rv({5, 4}), rv({5, -4}), kV);
  CHECK(crossings(report) == oracle::walls_on_segment(s, rv({5, 4}), rv({5, -4}), kV, 50));
}

TEST_CASE("segment enumeration matches the box oracle on random lattices") {
  Gen gen(2024);
  int checked = 0;
  for (int k = 0; k < 24; ++k) {
    const Eigen::Index rho = k % 3 == 2 ? 3 : 2;
    const IntMatrix g = gen.hyperbolic_gram(rho, 6);
    const NSLattice lat(g);
    const IntVector ref = gen.positive_class(lat, 3);
    const Surface s(k % 2 ? SurfaceKind::K3 : SurfaceKind::Abelian, lat, to_rational(ref));
    const RatVector from = to_rational(gen.cone_point(lat, to_rational(ref), 3));
    const RatVector to = to_rational(gen.cone_point(lat, to_rational(ref), 3));
    if (from == to) continue;
    const MukaiVector v{gen.range(2, 3), gen.vec(rho, 2), gen.range(-3, 1)};
    if (discriminant(s, v).sign() <= 0) continue;
    auto report = walls_on_segment(s, from, to, v);
    auto expected = oracle::walls_on_segment(s, from, to, v, rho == 2 ? 20 : 10);
    CHECK(crossings(report) == expected);
    CHECK(normals(walls_through(s, from, v)) == oracle::walls_through(s, from, v, rho == 2 ? 20 : 10));
    ++checked;
    for (const Crossing& c : report.crossings) {
      const RatVector at = (1 - c.t) * from + c.t * to;
      CHECK(intersect(s.ns(), to_rational(c.wall.normal), at) == 0);
      CHECK(content(c.wall.normal) == 1);
      CHECK(sign_normalized(c.wall.normal) == c.wall.normal);
      const Integer sq = square(s.ns(), c.wall.normal);
      CHECK(sq.sign() < 0);
      CHECK(Rational(-sq) <= wall_window(s, v));
    }
    for (std::size_t i = 1; i < report.crossings.size(); ++i) CHECK(report.crossings[i - 1].t <= report.crossings[i].t);
  }
  CHECK(checked >= 10);
}

TEST_CASE("general neighbor") {
  const Surface s = l2();
  CHECK(general_neighbor(s, rv({1, 0}), kV, rv({3, 1})) == rv({3, 1}));
  const RatVector a = general_neighbor(s, rv({1, 0}), kV, rv({3, 2}));
  CHECK(walls_through(s, a, kV).empty());
  CHECK_FALSE(walls_on_segment(s, rv({1, 0}), a, kV).crosses_interior());
  RatVector expected(2);
  expected << Rational(3, 2), Rational(1, 2);
  CHECK(a == expected);

  Gen gen(77);
  for (int k = 0; k < 40; ++k) {
    const RatVector h = to_rational(gen.cone_point(s.ns(), s.reference_ample(), 6));
    const RatVector toward = to_rational(gen.cone_point(s.ns(), s.reference_ample(), 6));
    if (h == toward) continue;
    try {
      const RatVector b = general_neighbor(s, h, kV, toward);
      CHECK(walls_through(s, b, kV).empty());
      CHECK_FALSE(walls_on_segment(s, h, b, kV).crosses_interior());
    } catch (const DomainError&) {
      // the whole segment lies in one wall
      auto r = walls_on_segment(s, h, toward, kV);
      bool inside = false;
      for (const Crossing& c : r.crossings) inside = inside || c.contains_segment;
      CHECK(inside);
    }
    const RatVector c = general_neighbor(s, h, kV);
    CHECK(walls_through(s, c, kV).empty());
    CHECK_FALSE(walls_on_segment(s, h, c, kV).crosses_interior());
  }
}

TEST_CASE("chamber equivalence is symmetric and transitive on samples") {
  const Surface s = l2();
  Gen gen(8);
  std::vector<RatVector> general;
  while (general.size() < 20) {
    RatVector h = to_rational(gen.cone_point(s.ns(), s.reference_ample(), 9));
    if (is_general(s, h, kV)) general.push_back(h);
  }
  const std::size_t n = general.size();
  std::vector<std::vector<bool>> same(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      same[i][j] = general[i] == general[j] || !walls_on_segment(s, general[i], general[j], kV).crosses_interior();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(same[i][j] == same[j][i]);
      for (std::size_t k = 0; k < n; ++k)
        if (same[i][j] && same[j][k]) CHECK(same[i][k]);
    }
}

TEST_CASE("rank-zero walls") {
  const Surface s = l2();
  const MukaiVector v = mv(0, {2, 0}, 2);
  Rank0Options only;
  only.candidates = {{iv({1, 1}), Integer(1)}};
  auto w = rank0_wall_candidates(s, v, only);
  REQUIRE(w.size() == 1);
  CHECK(w[0].normal == iv({0, 1}));
  CHECK(std::get<LWitness>(w[0].witness).L == iv({0, -2}));
  CHECK(w[0].rank_zero());

  Rank0Options other;
  other.candidates = {{iv({1, 0}), Integer(0)}, {iv({1, 0}), Integer(1)}};
  CHECK(rank0_wall_candidates(s, mv(0, {2, 1}, 1), other).empty());

  CHECK(rank0_walls(rank_one(), MukaiVector{0, iv({2}), 1}, rv({1}), rv({2})).empty());
  CHECK_THROWS_AS(rank0_walls(s, mv(0, {1, 1}, 1), rv({1, 0}), rv({3, 1})), UnsupportedError);
  CHECK_THROWS_AS(rank0_walls(s, mv(0, {-2, 0}, 1), rv({1, 0}), rv({3, 1})), DomainError);
  CHECK_THROWS_AS(rank0_walls(s, mv(0, {0, 0}, 1), rv({1, 0}), rv({3, 1})), InputError);
}

TEST_CASE("rank-zero walls match the box oracle") {
  const Surface s = l2();
  Gen gen(41);
  int checked = 0;
  for (int k = 0; k < 400 && checked < 15; ++k) {
    const MukaiVector v{0, gen.vec(2, 3), gen.range(-3, 3)};
    if (square(s.ns(), v.c1).sign() <= 0 || intersect(s.ns(), to_rational(v.c1), s.reference_ample()).sign() <= 0)
      continue;
    const RatVector from = rv({5, 4});
    const RatVector to = rv({5, -4});
    auto got = normals(rank0_walls(s, v, from, to));
    Integer lbox = 0;
    for (Eigen::Index i = 0; i < v.c1.size(); ++i) lbox = std::max(lbox, abs(v.c1[i]));
    auto expected = oracle::rank0_walls(s, v, from, to, (lbox + 2).convert_to<long>(), 60);
    CHECK(got == expected);
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("deterministic ordering") {
  const Surface s = l2();
  auto a = walls_on_segment(s, rv({5, 4}), rv({5, -4}), kV);
  auto b = walls_on_segment(s, rv({5, 4}), rv({5, -4}), kV);
  REQUIRE(a.crossings.size() == b.crossings.size());
  for (std::size_t i = 0; i < a.crossings.size(); ++i) {
    CHECK(a.crossings[i].t == b.crossings[i].t);
    CHECK(a.crossings[i].wall.normal == b.crossings[i].wall.normal);
  }
}
