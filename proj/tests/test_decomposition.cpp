#include "doctest.h"
#include "support.hpp"

#include "mukai/decomposition.hpp"
#include "mukai_oracle/brute_force.hpp"

using namespace mukai;
using namespace mukai::test;

namespace {

using Flat = std::vector<std::pair<long, std::vector<long>>>;

Flat flatten(const DecompositionCandidate& d) {
  Flat out;
  for (const auto& p : d.parts) {
    std::vector<long> x{p.v.rank.convert_to<long>()};
    for (Eigen::Index i = 0; i < p.v.c1.size(); ++i) x.push_back(p.v.c1[i].convert_to<long>());
    x.push_back(p.v.v2.convert_to<long>());
    out.emplace_back(p.n.convert_to<long>(), x);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::set<Flat> as_set(const std::vector<DecompositionCandidate>& ds) {
  std::set<Flat> out;
  for (const auto& d : ds) out.insert(flatten(d));
  return out;
}

bool contains(const std::vector<DecompositionCandidate>& ds, const Flat& f) { return as_set(ds).count(f) > 0; }

}  // namespace

TEST_CASE("decompositions of (2,0,-2)") {
  const Surface s = l2();
  const MukaiVector v = mv(2, {0, 0}, -2);
  auto ds = enumerate_decompositions(s, v, rv({1, 0}), {2});
  CHECK(contains(ds, Flat{{2, {1, 0, 0, -1}}}));
  CHECK(contains(ds, Flat{{1, {1, 0, -1, -1}}, {1, {1, 0, 1, -1}}}));
  CHECK(contains(ds, Flat{{1, {2, 0, 0, -2}}}));
  int trivial = 0;
  for (const auto& d : ds) {
    MukaiVector sum{0, iv({0, 0}), 0};
    for (const auto& p : d.parts) {
      sum = sum + p.n * p.v;
      CHECK(mukai_square(s.ns(), p.v) >= -2);
      CHECK(admissible_part(s, v, rv({1, 0}), p.v));
    }
    CHECK(sum == v);
    trivial += d.trivial;
  }
  CHECK(trivial == 1);
  CHECK(as_set(ds) == oracle::decompositions(s, v, rv({1, 0}), 2));
}

TEST_CASE("a primitive vector with no proper decomposition") {
  const Surface s = l2();
  const MukaiVector v = mv(3, {1, 0}, -1);
  auto ds = enumerate_decompositions(s, v, rv({1, 0}), {3});
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].trivial);
}

TEST_CASE("rank-zero decompositions") {
  const Surface s = l2();
  const MukaiVector v = mv(0, {2, 0}, 2);
  auto ds = enumerate_decompositions(s, v, rv({1, 0}), {2});
  CHECK(contains(ds, Flat{{2, {0, 1, 0, 1}}}));
  CHECK(as_set(ds) == oracle::decompositions(s, v, rv({1, 0}), 2));
}

TEST_CASE("decompositions match the oracle on random inputs") {
  Gen gen(12);
  const Surface surfaces[] = {l2(), l2(SurfaceKind::Abelian),
                              Surface(SurfaceKind::K3, NSLattice(gram({{2, 1}, {1, -4}})), rv({1, 0}))};
  int checked = 0;
  for (int k = 0; k < 80 && checked < 20; ++k) {
    const Surface& s = surfaces[k % 3];
    const IntVector h = gen.cone_point(s.ns(), s.reference_ample(), 3);
    const MukaiVector w{gen.range(0, 2), gen.vec(2, 1), gen.range(-1, 1)};
    const MukaiVector v = Integer(gen.range(1, 2)) * w;
    if (is_zero(v)) continue;
    if (v.rank.is_zero() && intersect(s.ns(), to_rational(v.c1), s.reference_ample()).sign() <= 0) continue;
    auto ds = enumerate_decompositions(s, v, to_rational(h), {2});
    CHECK(as_set(ds) == oracle::decompositions(s, v, to_rational(h), 2));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("terminalisation shapes") {
  const Surface s = l2();
  const RatVector h = rv({1, 0});
  auto sym = terminalisation_shape(s, {{{2, mv(1, {0, 0}, -1)}}}, h);
  REQUIRE(sym.factors.size() == 1);
  CHECK(sym.factors[0].kind == FactorKind::Symmetric);
  CHECK(sym.dimension == 8);
  CHECK_FALSE(sym.smooth);
  CHECK(sym.status == ModuliStatus::SingularTerminalisationNoResolution);

  auto pair = terminalisation_shape(s, {{{1, mv(1, {0, -1}, -1)}, {1, mv(1, {0, 1}, -1)}}}, h);
  CHECK(pair.factors.size() == 2);
  CHECK(pair.factors[0].kind == FactorKind::Hilbert);
  CHECK(pair.dimension == 4);
  CHECK(pair.smooth);
  CHECK(pair.status == ModuliStatus::SymplecticResolutionExists);

  auto point = terminalisation_shape(s, {{{1, mv(1, {0, 0}, 1)}, {3, mv(1, {0, 1}, -1)}}}, h);
  CHECK(point.factors[0].kind == FactorKind::Point);
  CHECK(point.factors[0].dimension == 0);
  CHECK(point.dimension == 6);
  CHECK(point.smooth);
}
