#pragma once

#include <string>
#include <utility>
#include <vector>

#include "phermion/oscillator.hpp"

namespace phermion {

// The abstract N=2 data: nilpotent supercharge Q, Hamiltonian H, grading tau,
// metric eta, and the projector on which {Q, Q#} = 2H is asserted.
struct PseudoSusySystem {
  ComplexMatrix H;
  ComplexMatrix Q;
  ComplexMatrix tau;
  MetricOperator eta = MetricOperator::identity(2);
  ComplexMatrix protected_projector;  // identity when nothing is truncated

  PseudoSusySystem(ComplexMatrix h, ComplexMatrix q, ComplexMatrix grading,
                   MetricOperator metric, ComplexMatrix protected_proj = {});
  PseudoSusySystem(const CompositeSystem& sys);  // NOLINT: adapter by design

  Index dim() const { return H.rows(); }
};

// Residuals for the defining relations: Q^2 = 0, [Q,H] = 0, {Q,Q#} = 2H on
// the protected subspace, {tau,Q} = 0, [tau,eta] = 0, plus the grading
// structure checks tau^2 = 1 and tau = tau^dag.
std::vector<RelationResidual> verify_algebra(const PseudoSusySystem& sys,
                                             double tol = defaults::tolerance);

// Which grade sector the nonzero block of Q maps into.  The canonical form
// has D: H+ -> H-; the concrete oscillators realize the mirrored direction
// (their Q annihilates the + sector), so the direction is recorded and the
// block identities below are stated direction-correctly.
enum class BlockDirection { plus_to_minus, minus_to_plus };
std::string to_string(BlockDirection d);

struct TwoComponentForm {
  ComplexMatrix basis;  // unitary grade basis, all + columns before all -
  Index dim_plus = 0;
  Index dim_minus = 0;
  ComplexMatrix D;       // the single nonzero off-diagonal block of Q
  BlockDirection direction = BlockDirection::plus_to_minus;
  ComplexMatrix D_sharp;  // eta-pseudo-adjoint block of D
  MetricOperator eta_plus = MetricOperator::identity(1);
  MetricOperator eta_minus = MetricOperator::identity(1);
  ComplexMatrix H_plus;
  ComplexMatrix H_minus;
  ComplexMatrix P_plus;   // protected projector blocks in the grade basis
  ComplexMatrix P_minus;
  std::vector<RelationResidual> checks;

  ComplexMatrix reassemble_Q() const;
  ComplexMatrix reassemble_H() const;
  ComplexMatrix reassemble_eta() const;
};

// Grade-block decomposition.  Throws StructureError on block leakage
// (eta or H coupling the sectors, or Q with two nonzero off-blocks).
TwoComponentForm two_component(const PseudoSusySystem& sys,
                               double tol = defaults::tolerance);

struct EigenGroup {
  Complex value;          // cluster representative
  ComplexMatrix vectors;  // orthonormal columns spanning the eigenspace
  bool real = false;
};

// Clusters the spectrum of H with threshold zero_eigenvalue_rel * spectral
// radius; requires H diagonalizable.
std::vector<EigenGroup> eigen_groups(const ComplexMatrix& h,
                                     double tol = defaults::tolerance);

struct SpectralLine {
  Complex value;
  int multiplicity = 0;
  std::vector<int> grades;  // tau eigenvalue per eigenspace direction
};

struct PairEntry {
  double eigenvalue = 0.0;
  ComplexVector plus;   // unit eigenvector of grade +
  ComplexVector minus;  // unit eigenvector of grade -
  double eta_norm_plus = 0.0;
  double eta_norm_minus = 0.0;
  std::string produced_by;  // "Q" or "Q#"
  int source_grade = -1;    // grade of the member the partner was produced from
  bool edge = false;        // a member leaves the protected subspace
  double partner_residual = 0.0;  // ||H w - E w|| for the produced partner
};

struct UnpairedEntry {
  Complex value;
  int grade = 0;
  std::string reason;  // "zero-mode" | "truncation-edge" | "no-partner"
};

struct PairingReport {
  std::vector<SpectralLine> spectrum;
  std::vector<PairEntry> pairs;
  std::vector<UnpairedEntry> unpaired;
  std::vector<std::pair<Complex, Complex>> complex_pairs;
  std::vector<RelationResidual> checks;
};

// Degeneracy pairing of the real nonzero spectrum across grade sectors,
// produced by applying Q (preferred) or Q# to one member.
PairingReport pair_spectrum(const PseudoSusySystem& sys,
                            double tol = defaults::tolerance);
// Same, over a caller-supplied eigenbasis (stable under unitary remixing of
// degenerate eigenvectors).
PairingReport pair_groups(const PseudoSusySystem& sys,
                          const std::vector<EigenGroup>& groups,
                          double tol = defaults::tolerance);

struct PairSigns {
  double eigenvalue = 0.0;
  int sign_plus = 0;
  int sign_minus = 0;
  int sign_e = 0;
  bool pass = false;  // sign_plus * sign_minus == sign_e
};

struct SignTheoremVerdict {
  std::vector<PairSigns> pair_signs;
  bool has_negative_real_eigenvalue = false;
  bool eta_indefinite = false;
  bool theorem_pass = false;       // negative real eigenvalue => indefinite eta
  bool corollary_applicable = false;  // eta == tau
  bool corollary_pass = true;      // then all nonzero real eigenvalues negative
  double max_cross_group_overlap = 0.0;
  std::vector<RelationResidual> checks;
};

// The norm-transfer relation <<Q psi | Q psi>> = 2 E_n <<psi | psi>> and its
// spectral consequences, evaluated on the paired spectrum.
SignTheoremVerdict sign_theorem_check(const PseudoSusySystem& sys,
                                      double tol = defaults::tolerance);

}  // namespace phermion
