#include "phermion/matops.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <limits>
#include <string>

namespace phermion {

namespace {

void require_square(const ComplexMatrix& m, const char* op) {
  if (m.rows() != m.cols()) {
    throw ShapeError(std::string(op) + ": matrix must be square, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": operand shapes differ, " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void require_finite(const ComplexMatrix& m, const char* op) {
  if (!m.allFinite()) {
    throw DomainError(std::string(op) + ": matrix has non-finite entries");
  }
}

}  // namespace

double fro_norm(const ComplexMatrix& m) { return m.norm(); }

bool approx_zero(const ComplexMatrix& m, double tol, double scale) {
  return fro_norm(m) <= tol * std::max(1.0, scale);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_shape(a, b, "approx_equal");
  return fro_norm(a - b) <= tol * residual_scale(a, b);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return fro_norm(m - m.adjoint()) <= tol * residual_scale(m);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, Index max_dim) {
  if (a.size() == 0 || b.size() == 0) {
    throw ShapeError("kron: empty operand");
  }
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim) {
    throw SizeError("kron: product dimension " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " exceeds cap " + std::to_string(max_dim));
  }
  return Eigen::kroneckerProduct(a, b);
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator");
  require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "anticommutator");
  require_same_shape(a, b, "anticommutator");
  return a * b + b * a;
}

ComplexMatrix inverse(const ComplexMatrix& a, double tol) {
  require_square(a, "inverse");
  require_finite(a, "inverse");
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  const double smin =
      svd.singularValues().size() ? svd.singularValues()(svd.singularValues().size() - 1) : 0.0;
  if (smin <= tol * std::max(1.0, smax)) {
    throw SingularityError("inverse: matrix singular within tolerance (smallest singular value " +
                               std::to_string(smin) + ")",
                           smin);
  }
  return a.partialPivLu().inverse();
}

double condition_number(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return sv(0) / sv(sv.size() - 1);
}

EigenDecomposition eig(const ComplexMatrix& a, double tol) {
  require_square(a, "eig");
  require_finite(a, "eig");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eig: eigensolver failed to converge");
  }
  EigenDecomposition out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();
  for (Index j = 0; j < out.vectors.cols(); ++j) {
    const double n = out.vectors.col(j).norm();
    if (n > 0) out.vectors.col(j) /= n;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(out.vectors);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double smin = sv.size() ? sv(sv.size() - 1) : 0.0;
  // Rank deficiency of the eigenvector matrix signals a defective input.
  out.diagonalizable = smin > tol * std::max(1.0, smax);
  out.condition_estimate =
      smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
  return out;
}

Inertia inertia_of(const ComplexMatrix& h, double tol) {
  require_square(h, "inertia_of");
  if (!is_hermitian(h, tol)) {
    throw DomainError("inertia_of: matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((h + h.adjoint()) / 2.0,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("inertia_of: eigensolver failed to converge");
  }
  const auto& ev = solver.eigenvalues();
  const double radius = ev.size() ? std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) : 0.0;
  const double thr = defaults::zero_eigenvalue_rel * radius;
  Inertia inertia;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > thr) {
      ++inertia.n_plus;
    } else if (ev(i) < -thr) {
      ++inertia.n_minus;
    } else {
      ++inertia.n_zero;
    }
  }
  return inertia;
}

ComplexMatrix sqrt_pos_def(const ComplexMatrix& h, double tol) {
  require_square(h, "sqrt_pos_def");
  if (!is_hermitian(h, tol)) {
    throw DomainError("sqrt_pos_def: matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((h + h.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success) {
    throw NumericError("sqrt_pos_def: eigensolver failed to converge");
  }
  const auto& ev = solver.eigenvalues();
  const double radius = ev.size() ? std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) : 0.0;
  if (ev.size() == 0 || ev(0) <= defaults::zero_eigenvalue_rel * radius) {
    throw DomainError("sqrt_pos_def: matrix is not positive definite (smallest eigenvalue " +
                      std::to_string(ev.size() ? ev(0) : 0.0) + ")");
  }
  ComplexMatrix root = solver.eigenvectors() *
                       ev.array().sqrt().matrix().asDiagonal() *
                       solver.eigenvectors().adjoint();
  return (root + root.adjoint()) / 2.0;
}

}  // namespace phermion
