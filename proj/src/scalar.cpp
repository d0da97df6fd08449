#include "mukai/scalar.hpp"

#include "mukai/errors.hpp"

#include <cctype>

namespace mukai {

Integer floor(const Rational& x) {
  Integer q = mp::numerator(x) / mp::denominator(x);  // truncates toward zero
  if (x.sign() < 0 && Rational(q) != x) q -= 1;
  return q;
}

Integer ceil(const Rational& x) { return -floor(-x); }

Integer abs(const Integer& x) { return x.sign() < 0 ? Integer(-x) : x; }
Rational abs(const Rational& x) { return x.sign() < 0 ? Rational(-x) : x; }

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

RatVector to_rational(const IntVector& x) { return x.cast<Rational>(); }

bool is_integral(const RatVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (mp::denominator(x[i]) != 1) return false;
  return true;
}

IntVector to_integer(const RatVector& x) {
  IntVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (mp::denominator(x[i]) != 1)
      throw InputError("expected an integral class, got coordinate " + to_string(x[i]));
    out[i] = mp::numerator(x[i]);
  }
  return out;
}

Integer content(const IntVector& x) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) g = gcd(g, x[i]);
  return g;
}

IntVector primitive_vector(const IntVector& x) {
  Integer g = content(x);
  if (g.is_zero() || g == 1) return x;
  IntVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = x[i] / g;
  return out;
}

IntVector sign_normalized(IntVector x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (x[i].sign() < 0) x = -x;
    break;
  }
  return x;
}

IntVector clear_denominators(const RatVector& x) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < x.size(); ++i) l = lcm(l, mp::denominator(x[i]));
  IntVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out[i] = mp::numerator(x[i]) * (l / mp::denominator(x[i]));
  return primitive_vector(out);
}

bool is_zero(const IntVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) return false;
  return true;
}

bool is_zero(const RatVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) return false;
  return true;
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num, den = 1;
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) &&
                      parse_integer(text.substr(slash + 1), den);
  if (!ok) throw InputError("not a rational number: \"" + std::string(text) + "\"");
  if (den.is_zero()) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string to_decimal(const Rational& x, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = abs(x) * scale + Rational(1, 2);
  Integer q = floor(scaled);
  std::string body = q.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (x.sign() < 0 && !q.is_zero() ? "-" : "") + body;
}

}  // namespace mukai
