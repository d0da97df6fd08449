#include "mukai/lattice.hpp"

namespace mukai {

Signature signature(const RatMatrix& form) {
  if (form.rows() != form.cols()) throw InputError("form is not square");
  RatMatrix a = form;
  const Eigen::Index n = a.rows();
  Signature sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n && pivot < 0; ++i)
      if (!a(i, i).is_zero()) pivot = i;
    if (pivot < 0) {
      // Zero diagonal: e_i + e_j has square 2·a(i,j) for an off-diagonal entry.
      for (Eigen::Index i = k; i < n && pivot < 0; ++i)
        for (Eigen::Index j = i + 1; j < n && pivot < 0; ++j)
          if (!a(i, j).is_zero()) {
            a.row(i) += a.row(j);
            a.col(i) += a.col(j);
            pivot = i;
          }
    }
    if (pivot < 0) {
      sig.zero += static_cast<int>(n - k);
      break;
    }
    a.row(k).swap(a.row(pivot));
    a.col(k).swap(a.col(pivot));
    const Rational d = a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / d;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
    }
    (d.sign() > 0 ? sig.positive : sig.negative) += 1;
  }
  return sig;
}

NSLattice::NSLattice(IntMatrix gram) : gram_(std::move(gram)) {
  const Eigen::Index n = gram_.rows();
  if (n == 0 || gram_.cols() != n) throw InputError("gram matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (mp::abs(gram_(i, i)) % 2 != 0)
      throw InputError("gram matrix must be even: diagonal entry " + std::to_string(i) + " is odd");
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (gram_(i, j) != gram_(j, i)) throw InputError("gram matrix is not symmetric");
  }
  gram_q_ = gram_.cast<Rational>();
  Signature sig = signature(gram_q_);
  if (sig.zero != 0) throw InputError("gram matrix is degenerate");
  if (sig.positive != 1)
    throw InputError("gram matrix must have signature (1, " + std::to_string(n - 1) + "), got (" +
                     std::to_string(sig.positive) + ", " + std::to_string(sig.negative) + ")");
}

std::string to_string(SurfaceKind kind) { return kind == SurfaceKind::K3 ? "K3" : "abelian"; }

Surface::Surface(SurfaceKind kind, NSLattice ns, RatVector reference_ample)
    : Surface(kind, std::move(ns), std::move(reference_ample), RatVector()) {}

Surface::Surface(SurfaceKind kind, NSLattice ns, RatVector reference_ample, RatVector canonical)
    : kind_(kind), ns_(std::move(ns)), reference_ample_(std::move(reference_ample)), canonical_(std::move(canonical)) {
  if (canonical_.size() == 0) canonical_ = RatVector::Constant(ns_.rank(), Rational(0));
  if (canonical_.size() != ns_.rank()) throw InputError("canonical class has the wrong length");
  if (reference_ample_.size() != ns_.rank())
    throw InputError("reference ample class has " + std::to_string(reference_ample_.size()) +
                     " coordinates, lattice rank is " + std::to_string(ns_.rank()));
  if (square(ns_, reference_ample_).sign() <= 0) throw InputError("reference ample class must have positive square");
}

bool in_positive_cone(const Surface& surface, const RatVector& h) {
  return square(surface.ns(), h).sign() > 0 && intersect(surface.ns(), h, surface.reference_ample()).sign() > 0;
}

void require_positive_cone(const Surface& surface, const RatVector& h, const std::string& what) {
  if (!in_positive_cone(surface, h)) throw InputError(what + " is not in the positive cone");
}

}  // namespace mukai
