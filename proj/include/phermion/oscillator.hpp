#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phermion/algebra.hpp"

namespace phermion {

// Tensor product of a truncated boson ladder (factor 0) with one two-level
// species (factor 1), carrying the supersymmetry data built from the factors:
//   H = E (N x 1 + 1 x n),  Q = sqrt(2|E|) (a^dag x c),  tau = 1 x (1 - 2 n),
//   eta = 1 x eta2.
struct CompositeSystem {
  std::vector<LadderRep> factors;
  Index dim = 0;
  double E = 0.0;
  int truncation = 0;
  ComplexMatrix H;
  ComplexMatrix Q;
  ComplexMatrix tau;
  MetricOperator eta = MetricOperator::identity(2);
  // Projector onto boson levels 0..truncation-1; identities involving
  // {Q, Q#} hold exactly only there (documented truncation artifact).
  ComplexMatrix protected_projector;
  std::map<std::pair<std::size_t, std::string>, ComplexMatrix> lifted_ops;

  // Embeds a factor-local operator into the product space.
  ComplexMatrix lift(std::size_t factor, const ComplexMatrix& op) const;
};

// E > 0 required.
CompositeSystem build_boson_fermion(double E, int truncation);
// E > 0 and a definite 2x2 metric required; indefinite metrics raise
// AlgebraObstruction from the phermion factor.
CompositeSystem build_boson_phermion(double E, int truncation, const ComplexMatrix& eta2,
                                     double tol = defaults::tolerance);
// E < 0 required; the lifted metric equals the grading operator.
CompositeSystem build_boson_abnormal_phermion(double E, int truncation);

// |n, grade> built by applying creators to the ground state, Euclidean
// normalized; the eta-norm keeps the factor metric's sign.
struct BasisState {
  ComplexVector vector;
  int boson_level = 0;
  int grade = +1;
  double eta_norm = 0.0;
};

BasisState basis_state(const CompositeSystem& sys, int boson_level, int grade);

}  // namespace phermion
