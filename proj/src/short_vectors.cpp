#include "mukai/short_vectors.hpp"

#include "mukai/errors.hpp"

namespace mukai {

namespace {

// Q(x) = Σ_i q(i,i)·(x_i + Σ_{j>i} q(i,j)·x_j)², the completed-square form.
RatMatrix completed_squares(const RatMatrix& form) {
  const Eigen::Index n = form.rows();
  RatMatrix q = form;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (q(i, i).sign() <= 0) throw InputError("short_vectors: form is not positive definite");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (Eigen::Index k = i + 1; k < n; ++k)
      for (Eigen::Index l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

struct Enumerator {
  const RatMatrix& q;
  const std::function<void(const IntVector&)>& visit;
  IntVector x;

  void descend(Eigen::Index i, const Rational& budget) {
    Rational center = 0;
    for (Eigen::Index j = i + 1; j < q.rows(); ++j) center -= q(i, j) * x[j];
    const Rational& d = q(i, i);
    auto cost = [&](const Integer& z) {
      Rational t = Rational(z) - center;
      return d * t * t;
    };
    // The admissible integers form an interval around `center`.
    const Integer start = floor(center);
    for (Integer z = start;; --z) {
      Rational c = cost(z);
      if (c > budget) break;
      step(i, z, budget - c);
    }
    for (Integer z = start + 1;; ++z) {
      Rational c = cost(z);
      if (c > budget) break;
      step(i, z, budget - c);
    }
  }

  void step(Eigen::Index i, const Integer& z, const Rational& remaining) {
    x[i] = z;
    if (i == 0) {
      if (!is_zero(x)) visit(x);
    } else {
      descend(i - 1, remaining);
    }
    x[i] = 0;
  }
};

}  // namespace

void for_each_short_vector(const RatMatrix& form, const Rational& bound,
                           const std::function<void(const IntVector&)>& visit) {
  if (form.rows() != form.cols()) throw InputError("short_vectors: form is not square");
  if (form.rows() == 0 || bound.sign() < 0) return;
  RatMatrix q = completed_squares(form);
  Enumerator e{q, visit, IntVector::Constant(form.rows(), Integer(0))};
  e.descend(form.rows() - 1, bound);
}

std::vector<IntVector> short_vectors(const RatMatrix& form, const Rational& bound) {
  std::vector<IntVector> out;
  for_each_short_vector(form, bound, [&](const IntVector& x) { out.push_back(x); });
  return out;
}

IntMatrix kernel_basis(const IntVector& row) {
  const Eigen::Index n = row.size();
  if (is_zero(row)) throw InputError("kernel_basis: zero functional");
  IntMatrix u = IntMatrix::Identity(n, n);
  IntVector r = row;
  // Column operations with determinant 1 drive the row to (g, 0, ..., 0).
  for (Eigen::Index j = 1; j < n; ++j) {
    if (r[j].is_zero()) continue;
    Integer g, s, t;
    mpz_gcdext(g.backend().data(), s.backend().data(), t.backend().data(), r[0].backend().data(),
               r[j].backend().data());
    const Integer a = r[0] / g, b = r[j] / g;
    IntVector c0 = u.col(0), cj = u.col(j);
    for (Eigen::Index k = 0; k < n; ++k) {
      u(k, 0) = s * c0[k] + t * cj[k];
      u(k, j) = a * cj[k] - b * c0[k];
    }
    r[0] = g;
    r[j] = 0;
  }
  if (r[0].is_zero()) {
    // Only reachable if row[0] = 0 and all others were zero too.
    throw std::logic_error("kernel_basis: degenerate reduction");
  }
  return u.rightCols(n - 1);
}

}  // namespace mukai
