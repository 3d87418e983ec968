#include "phermion/relations.hpp"

#include <algorithm>

namespace phermion {

RelationResidual check_relation(std::string name, const ComplexMatrix& lhs,
                                const ComplexMatrix& rhs, double tol) {
  RelationResidual r;
  r.relation_name = std::move(name);
  r.residual_norm = fro_norm(lhs - rhs);
  r.tolerance = tol * residual_scale(lhs, rhs);
  r.pass = r.residual_norm <= r.tolerance;
  return r;
}

RelationResidual check_zero(std::string name, const ComplexMatrix& m, double tol,
                            double scale) {
  RelationResidual r;
  r.relation_name = std::move(name);
  r.residual_norm = fro_norm(m);
  r.tolerance = tol * std::max(1.0, scale);
  r.pass = r.residual_norm <= r.tolerance;
  return r;
}

RelationResidual check_value(std::string name, double residual, double tol, double scale) {
  RelationResidual r;
  r.relation_name = std::move(name);
  r.residual_norm = residual;
  r.tolerance = tol * std::max(1.0, scale);
  r.pass = r.residual_norm <= r.tolerance;
  return r;
}

bool all_pass(const std::vector<RelationResidual>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationResidual& r) { return r.pass; });
}

double max_residual(const std::vector<RelationResidual>& checks) {
  double m = 0.0;
  for (const auto& r : checks) m = std::max(m, r.residual_norm);
  return m;
}

}  // namespace phermion
