#include "mukai/polynomial.hpp"

#include "mukai/errors.hpp"

#include <algorithm>

namespace mukai {

Poly1::Poly1(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Poly1::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly1::coefficient(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational Poly1::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Poly1(std::move(d));
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& a, const Poly1& b) { return a + Rational(-1) * b; }

Poly1 operator*(const Rational& s, const Poly1& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Poly1(std::move(c));
}

Poly1 remainder(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    const Rational q = r[static_cast<std::size_t>(k)] / b.leading();
    if (q.is_zero()) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= q * b.coefficient(i);
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)));
  return Poly1(std::move(r));
}

std::strong_ordering cmp_lex(const Poly1& f, const Poly1& g) {
  Poly1 d = f - g;
  return d.is_zero() ? std::strong_ordering::equal : order_of(sign(d.leading()));
}

namespace {

std::vector<Poly1> sturm_sequence(const Poly1& p) {
  std::vector<Poly1> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly1 r = remainder(seq[seq.size() - 2], seq.back());
    seq.push_back(Rational(-1) * r);
  }
  seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int real_roots_above(const Poly1& p, const Rational& a) {
  if (p.is_zero()) throw InputError("real_roots_above: zero polynomial");
  if (p(a).is_zero()) throw InputError("real_roots_above: a is a root");
  std::vector<Poly1> seq = sturm_sequence(p);
  std::vector<int> at_a, at_inf;
  for (const Poly1& q : seq) {
    at_a.push_back(sign(q(a)));
    at_inf.push_back(q.is_zero() ? 0 : sign(q.leading()));
  }
  return sign_changes(at_a) - sign_changes(at_inf);
}

Integer root_free_from(const Poly1& p) {
  if (p.is_zero()) throw InputError("root_free_from: zero polynomial");
  if (p.degree() == 0) return 0;
  // Cauchy: every real root is below 1 + max |a_i / a_n|.
  Rational cauchy = 0;
  for (int i = 0; i < p.degree(); ++i) cauchy = std::max(cauchy, abs(p.coefficient(i) / p.leading()));
  Integer lo = 0, hi = ceil(cauchy + 1);
  auto root_free = [&](const Integer& k) { return !p(Rational(k)).is_zero() && real_roots_above(p, Rational(k)) == 0; };
  if (root_free(lo)) return lo;
  // Invariant: root_free(hi) holds, root_free(lo) fails; the predicate is monotone.
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    (root_free(mid) ? hi : lo) = mid;
  }
  return hi;
}

Rational Poly2::coefficient(int deg_m, int deg_n) const {
  auto it = terms_.find({deg_m, deg_n});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly2::set(int deg_m, int deg_n, const Rational& c) {
  if (c.is_zero())
    terms_.erase({deg_m, deg_n});
  else
    terms_[{deg_m, deg_n}] = c;
}

void Poly2::add(int deg_m, int deg_n, const Rational& c) { set(deg_m, deg_n, coefficient(deg_m, deg_n) + c); }

Rational Poly2::operator()(const Rational& m, const Rational& n) const {
  Rational acc = 0;
  for (const auto& [key, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < key.first; ++i) t *= m;
    for (int j = 0; j < key.second; ++j) t *= n;
    acc += t;
  }
  return acc;
}

Poly1 Poly2::n_coefficient(int j) const {
  std::vector<Rational> c;
  for (const auto& [key, value] : terms_) {
    if (key.second != j) continue;
    if (c.size() <= static_cast<std::size_t>(key.first)) c.resize(static_cast<std::size_t>(key.first) + 1, Rational(0));
    c[static_cast<std::size_t>(key.first)] = value;
  }
  return Poly1(std::move(c));
}

Poly1 Poly2::n_zero_slice() const { return n_coefficient(0); }

Poly1 Poly2::at_m(const Rational& m) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_in_n() + 1, 0)), Rational(0));
  for (int j = 0; j <= degree_in_n(); ++j) c[static_cast<std::size_t>(j)] = n_coefficient(j)(m);
  return Poly1(std::move(c));
}

int Poly2::degree_in_n() const {
  int d = -1;
  for (const auto& [key, value] : terms_) d = std::max(d, key.second);
  return d;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 out = a;
  for (const auto& [key, c] : b.terms_) out.add(key.first, key.second, c);
  return out;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + Rational(-1) * b; }

Poly2 operator*(const Rational& s, const Poly2& p) {
  Poly2 out;
  for (const auto& [key, c] : p.terms_) out.set(key.first, key.second, s * c);
  return out;
}

std::strong_ordering cmp_lex(const Poly2& f, const Poly2& g) {
  const Poly2 d = f - g;
  if (d.is_zero()) return std::strong_ordering::equal;
  const Poly1 top = d.n_coefficient(d.degree_in_n());
  return order_of(sign(top.leading()));
}

std::strong_ordering cmp_zero(const Poly2& f, const Poly2& g) {
  auto first = cmp_lex(f.n_zero_slice(), g.n_zero_slice());
  if (first != 0) return first;
  return 0 <=> cmp_lex(f, g);
}

Integer stabilizing_threshold(const std::vector<Poly2>& polys) {
  if (polys.empty()) throw InputError("stabilizing_threshold: empty polynomial list");
  Integer m0 = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      const Poly2 d = polys[j] - polys[i];
      if (d.is_zero()) continue;
      m0 = std::max(m0, root_free_from(d.n_coefficient(d.degree_in_n())));
    }
  }
  return m0;
}

std::string to_string(const Poly1& p, char variable) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational c = p.coefficient(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational a = abs(c);
    if (i == 0 || a != 1) out += to_string(a);
    if (i > 0) out += variable;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [key, c] = *it;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational a = abs(c);
    const bool monomial = key.first + key.second > 0;
    if (!monomial || a != 1) out += to_string(a);
    if (key.first > 0) out += "m" + (key.first > 1 ? "^" + std::to_string(key.first) : std::string());
    if (key.second > 0) out += "n" + (key.second > 1 ? "^" + std::to_string(key.second) : std::string());
  }
  return out;
}

}  // namespace mukai
