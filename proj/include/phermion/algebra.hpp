#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phermion/matops.hpp"
#include "phermion/relations.hpp"

namespace phermion {

enum class Species { boson, fermion, phermion, abnormal_phermion };

std::string to_string(Species s);
std::optional<Species> species_from_string(const std::string& name);

// Hermitian, invertible, possibly indefinite metric.  Caches the inverse,
// the inertia, and the condition number at construction.
class MetricOperator {
public:
  static MetricOperator make(ComplexMatrix eta, double tol = defaults::tolerance);
  static MetricOperator identity(Index dim);
  static MetricOperator sigma3();
  static MetricOperator diagonal(const std::vector<double>& entries);

  const ComplexMatrix& matrix() const { return eta_; }
  const ComplexMatrix& inverse() const { return inv_; }
  const Inertia& inertia() const { return inertia_; }
  double condition() const { return condition_; }
  Index dim() const { return eta_.rows(); }

  bool positive_definite() const { return inertia_.positive_definite(); }
  bool negative_definite() const { return inertia_.negative_definite(); }
  bool indefinite() const { return inertia_.indefinite(); }

private:
  MetricOperator(ComplexMatrix eta, ComplexMatrix inv, Inertia inertia, double condition)
      : eta_(std::move(eta)), inv_(std::move(inv)), inertia_(inertia), condition_(condition) {}
  ComplexMatrix eta_;
  ComplexMatrix inv_;
  Inertia inertia_;
  double condition_;
};

// A# = eta^-1 A^dag eta.
ComplexMatrix pseudo_adjoint(const ComplexMatrix& a, const MetricOperator& eta);

// One ladder species: annihilator c, metric, and the statistics sign eps
// appearing in {c, c#} = eps (two-level species) or [c, c#] = 1 (boson).
struct LadderRep {
  Species species = Species::fermion;
  ComplexMatrix c;
  MetricOperator eta = MetricOperator::identity(2);
  int epsilon = +1;
  std::optional<int> truncation;  // bosons only
  bool metric_negated = false;    // negative-definite input was replaced by -eta

  Index dim() const { return c.rows(); }
  ComplexMatrix c_sharp() const { return pseudo_adjoint(c, eta); }
  // Number operator eps * c# c; diag(0..truncation) for the boson ladder.
  ComplexMatrix number() const;
};

// Fixed two-level matrices used across the reps.
ComplexMatrix two_level_annihilator();  // [[0,1],[0,0]]
ComplexMatrix sigma1();
ComplexMatrix sigma2();
ComplexMatrix sigma3();

LadderRep make_fermion();
// Conjugates the fermion rep by eta^{1/2}; requires a definite 2x2 metric.
// Negative-definite metrics are replaced by their negation (flagged);
// indefinite metrics are provably impossible -> AlgebraObstruction.
LadderRep make_phermion(const ComplexMatrix& eta2, double tol = defaults::tolerance);
LadderRep make_abnormal_phermion();
// Truncated ladder of dimension truncation+1 with a[k-1,k] = sqrt(k).
LadderRep make_boson(int truncation);

// Projector onto boson levels 0..truncation-1 (where the truncated
// commutator [a, a^dag] = 1 holds exactly).
ComplexMatrix below_top_projector(int truncation);

// Residuals for every defining relation of the species, including the
// ladder bracket with the number operator and, for two-level species, the
// closed commutator form [c, c#] = eps (1 - 2 n).
std::vector<RelationResidual> verify_species(const LadderRep& rep,
                                             double tol = defaults::tolerance);

struct MetricSolution {
  ComplexMatrix eta;  // unit Frobenius norm
  Inertia inertia;
};

// Solution space of eta c* = c^dag eta over Hermitian eta.
struct MetricClassification {
  std::vector<MetricSolution> basis;       // orthonormal coefficient basis
  std::optional<MetricSolution> generic;   // seeded random combination
  bool any_definite_basis_element() const;
};

MetricClassification classify_metrics(const ComplexMatrix& c, const ComplexMatrix& c_star,
                                      double tol = defaults::tolerance,
                                      std::uint64_t seed = defaults::seed);

// Most general 2x2 nilpotent sigma = [[s,u],[v,-s]] with s = i sqrt(uv);
// returns the anticommutator {sigma, sigma3 sigma^dag sigma3}, which equals
// -(|u|-|v|)^2 * 1 and therefore can never equal +1: no two-level rep with
// {c, c#} = 1 admits the indefinite metric sigma3.
ComplexMatrix obstruction_demo(Complex u, Complex v, double tol = defaults::tolerance);
ComplexMatrix obstruction_expected(Complex u, Complex v);

// eta^{1/2}: the similarity taking a definite-metric phermion rep to the
// fermion rep.  Requires positive-definite eta.
ComplexMatrix phermion_to_fermion_map(const ComplexMatrix& eta2,
                                      double tol = defaults::tolerance);

}  // namespace phermion
