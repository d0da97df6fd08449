#pragma once

// Box-scan reference implementations. Slow and obviously correct within
// their box: no lattice reduction, no quadratic solving, no pruning beyond
// the box. Pairings are evaluated with explicit loops over the Gram matrix.

#include "mukai/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace mukai::oracle {

using NormalSet = std::set<std::vector<long>>;

inline Rational dot(const IntMatrix& g, const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) s += a[i] * Rational(g(i, j)) * b[j];
  return s;
}

inline RatVector as_rational(const std::vector<long>& x) {
  RatVector r(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) r[static_cast<Eigen::Index>(i)] = Rational(x[i]);
  return r;
}

// Primitive, first nonzero entry positive.
inline std::vector<long> normalize(std::vector<long> x) {
  long g = 0;
  for (long c : x) g = std::gcd(g, c);
  if (g == 0) return x;
  for (long& c : x) c /= g;
  for (long c : x)
    if (c != 0) {
      if (c < 0)
        for (long& d : x) d = -d;
      break;
    }
  return x;
}

inline void scan_box(std::size_t n, long box, const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> x(n, -box);
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < n && x[i] == box) x[i++] = -box;
    if (i == n) return;
    ++x[i];
  }
}

inline Rational window(const Surface& surface, const MukaiVector& v) {
  const IntMatrix& g = surface.ns().gram<Integer>();
  const RatVector c1 = to_rational(v.c1);
  const Rational v0 = v.rank;
  const Rational delta = dot(g, c1, c1) - 2 * v0 * Rational(v.v2) + 2 * surface.epsilon() * v0 * v0;
  return v0 * v0 * delta / 4;
}

/// Normals of every ξ in the box with ξ·h = 0 and −window ≤ ξ² < 0.
inline NormalSet walls_through(const Surface& surface, const RatVector& h, const MukaiVector& v, long box) {
  const IntMatrix& g = surface.ns().gram<Integer>();
  const Rational w = window(surface, v);
  NormalSet out;
  scan_box(static_cast<std::size_t>(g.rows()), box, [&](const std::vector<long>& x) {
    const RatVector xi = as_rational(x);
    const Rational sq = dot(g, xi, xi);
    if (sq.sign() >= 0 || sq < -w) return;
    if (!dot(g, xi, h).is_zero()) return;
    out.insert(normalize(x));
  });
  return out;
}

struct SegmentHit {
  std::vector<long> normal;
  Rational t;
};

/// Every ξ in the box within the window whose hyperplane meets [from, to],
/// keyed by normal, with its crossing parameter (0 if the segment lies in it).
inline std::map<std::vector<long>, Rational> walls_on_segment(const Surface& surface, const RatVector& from,
                                                              const RatVector& to, const MukaiVector& v, long box) {
  const IntMatrix& g = surface.ns().gram<Integer>();
  const Rational w = window(surface, v);
  std::map<std::vector<long>, Rational> out;
  scan_box(static_cast<std::size_t>(g.rows()), box, [&](const std::vector<long>& x) {
    const RatVector xi = as_rational(x);
    const Rational sq = dot(g, xi, xi);
    if (sq.sign() >= 0 || sq < -w) return;
    const Rational a = dot(g, xi, from);
    const Rational b = dot(g, xi, to);
    if (a.sign() * b.sign() > 0) return;
    out[normalize(x)] = (a.is_zero() && b.is_zero()) ? Rational(0) : a / (a - b);
  });
  return out;
}

/// Rank-zero walls: ℓ in the box with 0 < ℓ·H0 < v1·H0, χ' scanned over
/// [−chi_box, chi_box], L = χ'v1 − v2ℓ with L² < 0 and L⊥ meeting [from, to].
inline NormalSet rank0_walls(const Surface& surface, const MukaiVector& v, const RatVector& from, const RatVector& to,
                             long ell_box, long chi_box) {
  const IntMatrix& g = surface.ns().gram<Integer>();
  const RatVector& ref = surface.reference_ample();
  const RatVector v1 = to_rational(v.c1);
  const Rational top = dot(g, v1, ref);
  NormalSet out;
  scan_box(static_cast<std::size_t>(g.rows()), ell_box, [&](const std::vector<long>& l) {
    const RatVector ell = as_rational(l);
    const Rational probe = dot(g, ell, ref);
    if (probe.sign() <= 0 || probe >= top) return;
    for (long chi = -chi_box; chi <= chi_box; ++chi) {
      const RatVector big_l = Rational(chi) * v1 - Rational(v.v2) * ell;
      if (dot(g, big_l, big_l).sign() >= 0) continue;
      const Rational a = dot(g, big_l, from);
      const Rational b = dot(g, big_l, to);
      if (a.sign() * b.sign() > 0) continue;
      std::vector<long> coords;
      for (Eigen::Index i = 0; i < big_l.size(); ++i) coords.push_back(static_cast<long>(numerator(big_l[i])));
      out.insert(normalize(coords));
    }
  });
  return out;
}

/// Decompositions by breadth over nondecreasing part sequences: every part is
/// taken from the box and checked against the proportionality constraints
/// written out directly.
inline std::set<std::vector<std::pair<long, std::vector<long>>>> decompositions(const Surface& surface,
                                                                               const MukaiVector& v,
                                                                               const RatVector& h, long box) {
  const IntMatrix& g = surface.ns().gram<Integer>();
  const long rho = static_cast<long>(g.rows());
  const long eps = surface.epsilon();
  auto to_long = [](const Integer& x) { return x.convert_to<long>(); };
  const long v0 = to_long(v.rank);
  const long vv2 = to_long(v.v2);
  const RatVector v1 = to_rational(v.c1);
  const Rational v1h = dot(g, v1, h);

  // Parts as flat vectors (w0, w1..., w2).
  std::vector<std::vector<long>> parts;
  scan_box(static_cast<std::size_t>(rho + 2), box, [&](const std::vector<long>& x) {
    const long w0 = x[0];
    const long w2 = x.back();
    const RatVector w1 = as_rational(std::vector<long>(x.begin() + 1, x.end() - 1));
    if (std::all_of(x.begin(), x.end(), [](long c) { return c == 0; })) return;
    const Rational sq = dot(g, w1, w1) - Rational(2 * w0 * w2);
    if (sq < -2) return;
    if (v0 > 0) {
      if (w0 < 1) return;
      if (dot(g, w1, h) / Rational(w0) != v1h / Rational(v0)) return;
      if (Rational(w2) / Rational(w0) != Rational(vv2) / Rational(v0)) return;
    } else {
      if (w0 != 0) return;
      if (dot(g, w1, surface.reference_ample()).sign() <= 0) return;
      const RatVector l = Rational(w2) * v1 - Rational(vv2) * w1;  // χ = v2 in rank 0
      if (!dot(g, l, h).is_zero()) return;
    }
    parts.push_back(x);
  });
  std::sort(parts.begin(), parts.end());

  std::vector<long> target{v0};
  for (Eigen::Index i = 0; i < v.c1.size(); ++i) target.push_back(to_long(v.c1[i]));
  target.push_back(vv2);

  std::set<std::vector<std::pair<long, std::vector<long>>>> out;
  std::vector<std::size_t> seq;
  // Depth bound: each part consumes at least one unit of rank, or of c1·H0
  // measured in units of the smallest positive value among the parts.
  Rational min_step = -1;
  for (const auto& p : parts) {
    Rational s = v0 > 0 ? Rational(p[0])
                        : dot(g, as_rational(std::vector<long>(p.begin() + 1, p.end() - 1)), surface.reference_ample());
    if (min_step.sign() < 0 || s < min_step) min_step = s;
  }
  if (parts.empty()) return out;
  const Rational total = v0 > 0 ? Rational(v0) : dot(g, v1, surface.reference_ample());
  const long depth = static_cast<long>(floor(total / min_step));

  std::function<void(std::size_t, std::vector<long>)> walk = [&](std::size_t from, std::vector<long> sum) {
    if (sum == target) {
      std::map<std::vector<long>, long> counts;
      for (std::size_t i : seq) ++counts[parts[i]];
      std::vector<std::pair<long, std::vector<long>>> d;
      for (const auto& [p, c] : counts) d.emplace_back(c, p);
      out.insert(d);
    }
    if (static_cast<long>(seq.size()) >= depth) return;
    for (std::size_t i = from; i < parts.size(); ++i) {
      std::vector<long> next = sum;
      for (std::size_t k = 0; k < next.size(); ++k) next[k] += parts[i][k];
      seq.push_back(i);
      walk(i, next);
      seq.pop_back();
    }
  };
  walk(0, std::vector<long>(target.size(), 0));
  return out;
}

}  // namespace mukai::oracle
