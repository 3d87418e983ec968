#pragma once

#include <Eigen/SparseCore>

#include <string>
#include <utility>
#include <vector>

#include "phermion/algebra.hpp"

namespace phermion {

// Site operators have 2^(ell-1) nonzeros in dimension 2^ell, so the module
// stores them sparse; dense views stay cheap for small site counts.
using SparseComplex = Eigen::SparseMatrix<Complex>;

// ell two-level sites with relative fermi statistics realized by sigma3
// strings: site i acts as sigma3^(i-1) (x) (i alpha) (x) 1^(ell-i), with the
// indefinite metric sigma3^(x)ell.  Site indices are 1-based throughout.
struct MultiPhermionSystem {
  int ell = 0;
  Index dim = 0;  // 2^ell
  std::vector<SparseComplex> site_annihilators;
  std::vector<SparseComplex> site_creators;  // pseudo-adjoints of the above
  Eigen::VectorXd eta_diagonal;              // sigma3^(x)ell signs, +-1
  SparseComplex total_number;                // N = -sum_i alpha_i# alpha_i

  SparseComplex eta() const;     // sparse diagonal metric
  MetricOperator metric() const; // dense view; intended for small ell

  const SparseComplex& annihilator(int site) const;
  const SparseComplex& creator(int site) const;
};

// ell in [2, 12] (dimension cap 4096).
MultiPhermionSystem build_multi(int ell);

struct OccupationState {
  std::vector<int> occupation;  // nu_1..nu_ell, each 0 or 1
  ComplexVector vector;         // i^(sum nu) times the tensor basis column
  double eta_norm = 0.0;        // (-1)^(sum nu)
};

// The state made by applying the site creators in index order to the vacuum.
OccupationState occupation_state(const MultiPhermionSystem& sys,
                                 const std::vector<int>& nu);
// All 2^ell states in binary counting order (site 1 = most significant bit).
std::vector<OccupationState> occupation_basis(const MultiPhermionSystem& sys);

struct PhysicalSubspace {
  SparseComplex basis;      // columns: the even-occupation states
  SparseComplex projector;  // orthogonal projector onto their span
  std::vector<std::vector<int>> occupations;  // per basis column
};

// The even-occupation sector: every member has eta-norm +1; dim 2^(ell-1).
PhysicalSubspace physical_subspace(const MultiPhermionSystem& sys);
// 2^(ell-1) for ell >= 1 (a single site has exactly one physical state).
Index physical_dimension(int ell);

// Composite operators.  Pair operators need i < j; shifts take any sites.
SparseComplex pair_annihilator(const MultiPhermionSystem& sys, int i, int j);
SparseComplex pair_creator(const MultiPhermionSystem& sys, int i, int j);
SparseComplex shift(const MultiPhermionSystem& sys, int i, int j);  // beta_ij

struct PhysicalOperators {
  std::vector<std::pair<int, int>> pair_index;  // (i, j) with i < j
  std::vector<SparseComplex> annihilators;      // alpha_ij = alpha_i alpha_j
  std::vector<SparseComplex> creators;          // alpha+_ij = alpha_j# alpha_i#
  std::vector<SparseComplex> shifts;            // beta_ij, row-major ell x ell

  const SparseComplex& annihilator(int i, int j) const;
  const SparseComplex& creator(int i, int j) const;
  const SparseComplex& shift(int i, int j) const;
};

PhysicalOperators physical_ops(const MultiPhermionSystem& sys);

// Site-level relations: pairwise anticommutators, creators as
// pseudo-adjoints, number-operator action, and the occupation inner products.
std::vector<RelationResidual> verify_multi_relations(
    const MultiPhermionSystem& sys, double tol = defaults::tolerance);

// Closed form of [alpha_ij, alpha+_kl]:
//   (d_ik d_jl - d_il d_jk) 1 + d_jl b_ki - d_jk b_li - d_il b_kj + d_ik b_lj
SparseComplex pair_commutator_closed_form(const MultiPhermionSystem& sys,
                                          int i, int j, int k, int l);

struct PairCommutatorCheck {
  int i = 0, j = 0, k = 0, l = 0;
  double identity_coeff = 0.0;  // d_ik d_jl - d_il d_jk
  double beta_ki_coeff = 0.0;   // +d_jl
  double beta_li_coeff = 0.0;   // -d_jk
  double beta_kj_coeff = 0.0;   // -d_il
  double beta_lj_coeff = 0.0;   // +d_ik
  double residual = 0.0;        // brute-force commutator vs the closed form
  bool pass = false;
};

struct PhysCommutatorReport {
  std::vector<PairCommutatorCheck> tuples;  // all i<j, k<l
  std::vector<RelationResidual> checks;     // aggregated relation verdicts
};

// Full sweep of the composite-operator algebra.
PhysCommutatorReport verify_phys_commutators(
    const MultiPhermionSystem& sys, double tol = defaults::tolerance);

}  // namespace phermion
