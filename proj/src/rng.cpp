#include "phermion/rng.hpp"

namespace phermion {

Complex random_complex(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return {dist(rng), dist(rng)};
}

ComplexMatrix random_matrix(Index dim, Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      m(i, j) = Complex{dist(rng), dist(rng)};
    }
  }
  return m;
}

ComplexMatrix random_hermitian(Index dim, Rng& rng) {
  ComplexMatrix m = random_matrix(dim, rng);
  return (m + m.adjoint()) / 2.0;
}

ComplexMatrix random_invertible(Index dim, Rng& rng, double min_sv) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ComplexMatrix m = random_matrix(dim, rng);
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    if (svd.singularValues()(svd.singularValues().size() - 1) >= min_sv) return m;
  }
  throw NumericError("random_invertible: failed to draw a well-conditioned matrix");
}

ComplexMatrix random_unitary(Index dim, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(dim, rng));
  ComplexMatrix q = qr.householderQ();
  // Fix the column phases so the factorization is unique-ish; keeps tests stable.
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix random_metric(Index dim, Rng& rng, bool definite) {
  // Eigenvalues bounded away from zero keep the metric well conditioned.
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::bernoulli_distribution flip(0.5);
  ComplexMatrix u = random_unitary(dim, rng);
  Eigen::VectorXd d(dim);
  bool mixed = false;
  for (Index i = 0; i < dim; ++i) {
    double s = definite ? 1.0 : (flip(rng) ? 1.0 : -1.0);
    if (!definite && i == dim - 1 && !mixed) s = -1.0;  // guarantee indefiniteness
    if (s < 0) mixed = true;
    d(i) = s * mag(rng);
  }
  ComplexMatrix m = u * d.cast<Complex>().asDiagonal() * u.adjoint();
  return (m + m.adjoint()) / 2.0;
}

}  // namespace phermion
