#pragma once

#include <array>
#include <string>
#include <vector>

#include "phermion/algebra.hpp"

namespace phermion {

// J1 = (c + c#)/2, J2 = (c - c#)/(2i), J3 = -n + 1/2 in the basic
// two-dimensional representation of the species with sign epsilon.
struct JTriple {
  int epsilon = +1;
  ComplexMatrix J1, J2, J3;
  std::array<int, 3> delta{1, 1, 1};  // bracket signs; (1,1,-1) for eps=-1
  MetricOperator eta = MetricOperator::identity(2);

  // "su(2)" for epsilon=+1, "su(1,1)" for epsilon=-1.
  std::string algebra_name() const;
};

// epsilon must be +1 (fermion, eta = 1) or -1 (abnormal phermion, eta =
// sigma3); anything else is a config error.
JTriple build_j_triple(int epsilon);

// The three brackets [J_i, J_j] == i delta_k e_ijk J_k, the #-Hermiticity of
// each J, the ladder commutator [c, c#] == 2 eps J3, and the Casimir witness
// J1^2 + J2^2 + delta_3 J3^2 == eps (3/4) 1.  Exact half-integer arithmetic,
// so the default tolerance is far tighter than elsewhere.
std::vector<RelationResidual> verify_brackets(const JTriple& t,
                                              double tol = 1e-14);

// J1^2 + J2^2 + delta_3 J3^2, proportional to the identity; the sign of the
// proportionality constant separates the compact from the noncompact algebra.
ComplexMatrix casimir_witness(const JTriple& t);

}  // namespace phermion
