#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>

#include "phermion/errors.hpp"

namespace phermion {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

namespace defaults {
// Absolute tolerance on Frobenius residuals, scaled by max(1, operand norms).
inline constexpr double tolerance = 1e-10;
// Eigenvalues below this fraction of the spectral radius count as zero.
inline constexpr double zero_eigenvalue_rel = 1e-8;
inline constexpr std::uint64_t seed = 0xC0FFEE;
// Total dimension cap for Kronecker products.
inline constexpr Index max_kron_dim = Index{1} << 20;
}  // namespace defaults

double fro_norm(const ComplexMatrix& m);

// max(1, ||op||_F ...): the residual scale used by every comparison.
template <typename... Ms>
double residual_scale(const Ms&... ops) {
  double s = 1.0;
  ((s = std::max(s, fro_norm(ops))), ...);
  return s;
}

bool approx_zero(const ComplexMatrix& m, double tol = defaults::tolerance,
                 double scale = 1.0);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = defaults::tolerance);
bool is_hermitian(const ComplexMatrix& m, double tol = defaults::tolerance);

// Signature (n+, n-, n0) of a Hermitian matrix.
struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  int dim() const { return n_plus + n_minus + n_zero; }
  bool positive_definite() const { return n_minus == 0 && n_zero == 0 && n_plus > 0; }
  bool negative_definite() const { return n_plus == 0 && n_zero == 0 && n_minus > 0; }
  bool definite() const { return positive_definite() || negative_definite(); }
  bool indefinite() const { return n_plus > 0 && n_minus > 0; }
  bool singular() const { return n_zero > 0; }
  bool operator==(const Inertia&) const = default;
};

struct EigenDecomposition {
  ComplexVector values;
  ComplexMatrix vectors;  // unit Euclidean norm columns
  bool diagonalizable = true;
  double condition_estimate = 0.0;  // spectral condition of the eigenvector matrix
};

// Kronecker product with a total-dimension cap (size error beyond it).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Index max_dim = defaults::max_kron_dim);

ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Inverse of a square matrix; throws SingularityError (with the smallest
// singular value) when the matrix is singular within tolerance.
ComplexMatrix inverse(const ComplexMatrix& a, double tol = defaults::tolerance);

// Spectral condition number sigma_max / sigma_min (inf when singular).
double condition_number(const ComplexMatrix& a);

// Dense eigendecomposition of a general complex square matrix.
EigenDecomposition eig(const ComplexMatrix& a, double tol = defaults::tolerance);

// Counts of positive / negative / zero eigenvalues of a Hermitian matrix,
// with the zero threshold zero_eigenvalue_rel * spectral radius.
Inertia inertia_of(const ComplexMatrix& h, double tol = defaults::tolerance);

// Principal square root of a Hermitian positive-definite matrix.
ComplexMatrix sqrt_pos_def(const ComplexMatrix& h, double tol = defaults::tolerance);

}  // namespace phermion
