#pragma once

#include <string>
#include <vector>

#include "phermion/matops.hpp"

namespace phermion {

// One verified algebraic relation.  pass <=> residual_norm <= tolerance,
// where tolerance is the configured absolute tolerance scaled by
// max(1, operand norms).
struct RelationResidual {
  std::string relation_name;
  double residual_norm = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

RelationResidual check_relation(std::string name, const ComplexMatrix& lhs,
                                const ComplexMatrix& rhs,
                                double tol = defaults::tolerance);

// For relations of the form M == 0; scale carries the operand norms.
RelationResidual check_zero(std::string name, const ComplexMatrix& m,
                            double tol = defaults::tolerance, double scale = 1.0);

// For scalar facts already reduced to a residual.
RelationResidual check_value(std::string name, double residual,
                             double tol = defaults::tolerance, double scale = 1.0);

bool all_pass(const std::vector<RelationResidual>& checks);
double max_residual(const std::vector<RelationResidual>& checks);

}  // namespace phermion
