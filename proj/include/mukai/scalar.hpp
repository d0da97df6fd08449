#pragma once

// Exact scalar types and the dense Eigen aliases built on them.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mukai {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Lattice points: Chern classes, wall normals.
using IntVector = Vector<Integer>;
/// Rational points of NS(X) ⊗ Q: ample classes, probes, segment points.
using RatVector = Vector<Rational>;
using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

inline std::strong_ordering order_of(int s) {
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

template <typename Scalar>
std::strong_ordering compare(const Scalar& a, const Scalar& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Integer abs(const Integer& x);
Rational abs(const Rational& x);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

RatVector to_rational(const IntVector& x);
bool is_integral(const RatVector& x);
/// Throws InputError if some coordinate is not an integer.
IntVector to_integer(const RatVector& x);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& x);
/// x / content(x); the zero vector is returned unchanged.
IntVector primitive_vector(const IntVector& x);
/// Flip the sign so the first nonzero coordinate is positive.
IntVector sign_normalized(IntVector x);
/// Smallest positive integer multiple of a rational vector, made primitive.
IntVector clear_denominators(const RatVector& x);

bool is_zero(const IntVector& x);
bool is_zero(const RatVector& x);

/// Lexicographic order on coordinates; shorter vectors sort first.
template <typename Scalar>
std::strong_ordering lex_compare(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    auto c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

struct LexLess {
  template <typename Scalar>
  bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return lex_compare(a, b) < 0;
  }
};

/// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
/// Accepts "p", "-p", "p/q"; throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// Decimal approximation with a fixed number of digits after the point,
/// rounded half away from zero. Display only.
std::string to_decimal(const Rational& x, int digits);

template <typename Scalar>
std::vector<Scalar> to_std(const Vector<Scalar>& x) {
  return std::vector<Scalar>(x.data(), x.data() + x.size());
}

template <typename Scalar>
Vector<Scalar> from_std(const std::vector<Scalar>& x) {
  Vector<Scalar> out(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out[static_cast<Eigen::Index>(i)] = x[i];
  return out;
}

}  // namespace mukai
