#pragma once

// Polynomials over Q in one variable and in two variables (m, n), with the
// orderings used for Gieseker-type stability.

#include "mukai/scalar.hpp"

#include <map>
#include <utility>

namespace mukai {

/// Dense univariate polynomial; coefficient i multiplies xⁱ. Kept trimmed.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  ///< −1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Poly1 derivative() const;

  friend Poly1 operator+(const Poly1& a, const Poly1& b);
  friend Poly1 operator-(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Rational& s, const Poly1& p);
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Remainder of a by b (b nonzero).
Poly1 remainder(const Poly1& a, const Poly1& b);

/// Lexicographic order on coefficients from the top degree down, i.e. the
/// order of values for x ≫ 0.
std::strong_ordering cmp_lex(const Poly1& f, const Poly1& g);

/// Number of distinct real roots in (a, ∞), via a Sturm sequence. Requires p(a) ≠ 0.
int real_roots_above(const Poly1& p, const Rational& a);
/// Smallest integer k ≥ 0 with p(x) ≠ 0 for every real x ≥ k. p nonzero.
Integer root_free_from(const Poly1& p);

/// Sparse polynomial in (m, n); keys are (deg_m, deg_n). Zero coefficients
/// are never stored.
class Poly2 {
 public:
  using Key = std::pair<int, int>;

  Poly2() = default;

  Rational coefficient(int deg_m, int deg_n) const;
  void set(int deg_m, int deg_n, const Rational& c);
  void add(int deg_m, int deg_n, const Rational& c);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational operator()(const Rational& m, const Rational& n) const;
  /// f(•, 0) as a polynomial in m.
  Poly1 n_zero_slice() const;
  /// Coefficient of nʲ as a polynomial in m.
  Poly1 n_coefficient(int j) const;
  /// f(m', •) as a polynomial in n.
  Poly1 at_m(const Rational& m) const;
  int degree_in_n() const;

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Rational& s, const Poly2& p);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Key, Rational> terms_;
};

/// Lexicographic order on Q[m,n] = (Q[m])[n]: n-coefficients from the top
/// n-degree down, each compared as an element of Q[m].
std::strong_ordering cmp_lex(const Poly2& f, const Poly2& g);

/// f ≤₀ g  ⟺  f(•,0) < g(•,0), or f(•,0) = g(•,0) and f ≥ g.
/// The second key is reversed. f =₀ g exactly when f = g.
std::strong_ordering cmp_zero(const Poly2& f, const Poly2& g);

/// An m₀ such that for all m' ≥ m₀ and all P, Q in the list the orders
/// P ≤ Q, P(m',•) ≤ Q(m',•) and P(m',n') ≤ Q(m',n') for n' ≫ 0 agree.
/// Sound; minimal only with respect to the leading n-coefficient of each
/// difference. Throws InputError on an empty list.
Integer stabilizing_threshold(const std::vector<Poly2>& polys);

std::string to_string(const Poly1& p, char variable = 'x');
std::string to_string(const Poly2& p);

}  // namespace mukai
