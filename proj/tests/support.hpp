#pragma once

#include "mukai/mukai_vector.hpp"
#include "mukai/short_vectors.hpp"

#include <random>

namespace mukai::test {

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

inline RatVector rv(std::initializer_list<long> xs) { return to_rational(iv(xs)); }

inline IntMatrix gram(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix g(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  Eigen::Index i = 0;
  for (auto row : rows) {
    Eigen::Index j = 0;
    for (long x : row) g(i, j++) = x;
    ++i;
  }
  return g;
}

/// diag(2, −2) with reference class (1, 0).
inline Surface l2(SurfaceKind kind = SurfaceKind::K3) {
  return Surface(kind, NSLattice(gram({{2, 0}, {0, -2}})), rv({1, 0}));
}

/// ⟨2⟩ with reference class (1).
inline Surface rank_one(SurfaceKind kind = SurfaceKind::K3) {
  return Surface(kind, NSLattice(gram({{2}})), rv({1}));
}

inline MukaiVector mv(long r, std::initializer_list<long> c1, long v2) { return {Integer(r), iv(c1), Integer(v2)}; }
inline NumericalSheaf ns(long r, std::initializer_list<long> c1, long chi) { return {Integer(r), iv(c1), Integer(chi)}; }

/// Small input generators over a fixed seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  IntVector vec(Eigen::Index n, long box) {
    IntVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = range(-box, box);
    return v;
  }

  /// Random even Gram matrix of signature (1, n−1), found by rejection.
  IntMatrix hyperbolic_gram(Eigen::Index n, long box) {
    while (true) {
      IntMatrix g(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        g(i, i) = 2 * range(-box / 2, box / 2);
        for (Eigen::Index j = i + 1; j < n; ++j) g(i, j) = g(j, i) = range(-box, box);
      }
      auto s = signature(g.cast<Rational>());
      if (s.zero == 0 && s.positive == 1) return g;
    }
  }

  /// A class of positive square with small entries.
  IntVector positive_class(const NSLattice& lattice, long box) {
    while (true) {
      IntVector h = vec(lattice.rank(), box);
      if (square(lattice, h).sign() > 0) return h;
    }
  }

  /// A point of the positive cone on the side of `ref`.
  IntVector cone_point(const NSLattice& lattice, const RatVector& ref, long box) {
    while (true) {
      IntVector h = vec(lattice.rank(), box);
      if (square(lattice, h).sign() > 0 && intersect(lattice, to_rational(h), ref).sign() > 0) return h;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Graded pieces of equal H-slope with pairwise distinct c1/r and Δ ≥ 0:
/// c_i = r_i·base + K·y_i with the columns of K spanning h⊥, and χ_i at
/// most the largest value keeping Δ_i nonnegative. Entries of c_i stay
/// within `box`.
inline std::vector<NumericalSheaf> slope_filtration(Gen& gen, const Surface& s, const IntVector& h, long pieces,
                                                    long max_rank, long box) {
  const NSLattice& ns = s.ns();
  const IntMatrix k = kernel_basis(IntVector(ns.gram<Integer>() * h));
  while (true) {
    const IntVector base = gen.vec(ns.rank(), 1);
    std::vector<NumericalSheaf> out;
    std::vector<RatVector> seen;
    bool ok = true;
    for (long i = 0; i < pieces && ok; ++i) {
      const long r = gen.range(1, max_rank);
      const IntVector y = gen.vec(k.cols(), 2);
      const IntVector c1 = Integer(r) * base + k * y;
      for (Eigen::Index j = 0; j < c1.size(); ++j)
        if (abs(c1[j]) > box) ok = false;
      const RatVector normalized = to_rational(c1) / Rational(r);
      for (const RatVector& x : seen)
        if (x == normalized) ok = false;
      seen.push_back(normalized);
      // Δ = c1² − 2r(χ − 2εr) ≥ 0.
      const Integer top = floor(Rational(square(ns, c1), 2 * r)) + 2 * s.epsilon() * r;
      out.push_back({Integer(r), c1, top - gen.range(0, 3)});
    }
    if (ok) return out;
  }
}

}  // namespace mukai::test
