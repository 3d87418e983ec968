#include "phermion/pseudosusy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <utility>

namespace phermion {

namespace {

void require_dim(const ComplexMatrix& m, Index d, const char* what) {
  if (m.rows() != d || m.cols() != d) {
    throw ShapeError(std::string(what) + " must be " + std::to_string(d) + "x" +
                     std::to_string(d));
  }
}

// Drops the direction `coords` (expressed in the column basis of u) from u.
ComplexMatrix deflate(const ComplexMatrix& u, const ComplexVector& coords) {
  const Index k = u.cols();
  if (k <= 1) return ComplexMatrix(u.rows(), 0);
  ComplexMatrix col = coords.normalized();
  Eigen::HouseholderQR<ComplexMatrix> qr(col);
  ComplexMatrix full = qr.householderQ() * ComplexMatrix::Identity(k, k);
  return u * full.rightCols(k - 1);
}

double eta_norm_of(const ComplexVector& v, const ComplexMatrix& eta) {
  return (v.adjoint() * eta * v)(0, 0).real();
}

struct GradedGroup {
  Complex value;
  bool real = false;
  ComplexMatrix plus;   // orthonormal eigenvectors of grade +
  ComplexMatrix minus;  // orthonormal eigenvectors of grade -
  double grade_split_residual = 0.0;
};

// Splits one eigenspace by grade by diagonalizing tau restricted to it.
GradedGroup split_by_grade(const EigenGroup& g, const ComplexMatrix& tau) {
  GradedGroup out;
  out.value = g.value;
  out.real = g.real;
  const ComplexMatrix t = g.vectors.adjoint() * tau * g.vectors;
  const ComplexMatrix t_herm = 0.5 * (t + t.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(t_herm);
  const Index k = g.vectors.cols();
  std::vector<Index> plus_idx, minus_idx;
  for (Index j = 0; j < k; ++j) {
    const double lam = es.eigenvalues()(j);
    out.grade_split_residual =
        std::max(out.grade_split_residual, std::abs(std::abs(lam) - 1.0));
    (lam > 0 ? plus_idx : minus_idx).push_back(j);
  }
  const ComplexMatrix rotated = g.vectors * es.eigenvectors();
  out.plus.resize(g.vectors.rows(), static_cast<Index>(plus_idx.size()));
  out.minus.resize(g.vectors.rows(), static_cast<Index>(minus_idx.size()));
  for (std::size_t j = 0; j < plus_idx.size(); ++j) {
    out.plus.col(static_cast<Index>(j)) = rotated.col(plus_idx[j]);
  }
  for (std::size_t j = 0; j < minus_idx.size(); ++j) {
    out.minus.col(static_cast<Index>(j)) = rotated.col(minus_idx[j]);
  }
  return out;
}

}  // namespace

PseudoSusySystem::PseudoSusySystem(ComplexMatrix h, ComplexMatrix q,
                                   ComplexMatrix grading, MetricOperator metric,
                                   ComplexMatrix protected_proj)
    : H(std::move(h)),
      Q(std::move(q)),
      tau(std::move(grading)),
      eta(std::move(metric)),
      protected_projector(std::move(protected_proj)) {
  const Index d = H.rows();
  if (d == 0 || H.cols() != d) throw ShapeError("Hamiltonian must be square");
  require_dim(Q, d, "supercharge");
  require_dim(tau, d, "grading operator");
  if (eta.dim() != d) throw ShapeError("metric dimension mismatch");
  if (protected_projector.size() == 0) {
    protected_projector = ComplexMatrix::Identity(d, d);
  } else {
    require_dim(protected_projector, d, "protected projector");
  }
}

PseudoSusySystem::PseudoSusySystem(const CompositeSystem& sys)
    : PseudoSusySystem(sys.H, sys.Q, sys.tau, sys.eta, sys.protected_projector) {}

std::vector<RelationResidual> verify_algebra(const PseudoSusySystem& sys,
                                             double tol) {
  const Index d = sys.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix& p = sys.protected_projector;
  const ComplexMatrix q_sharp = pseudo_adjoint(sys.Q, sys.eta);
  std::vector<RelationResidual> out;
  const double q_norm = fro_norm(sys.Q);
  out.push_back(check_zero("Q^2 == 0", sys.Q * sys.Q, tol,
                           std::max(1.0, q_norm * q_norm)));
  out.push_back(check_zero("[Q, H] == 0", commutator(sys.Q, sys.H), tol,
                           residual_scale(sys.Q * sys.H)));
  out.push_back(check_zero(
      "{Q, Q#} == 2H (protected)",
      p * (anticommutator(sys.Q, q_sharp) - 2.0 * sys.H) * p, tol,
      residual_scale(sys.Q * q_sharp, sys.H)));
  out.push_back(check_zero("{tau, Q} == 0", anticommutator(sys.tau, sys.Q), tol,
                           residual_scale(sys.Q)));
  out.push_back(check_zero("[tau, eta] == 0",
                           commutator(sys.tau, sys.eta.matrix()), tol,
                           residual_scale(sys.eta.matrix())));
  out.push_back(check_relation("tau^2 == 1", sys.tau * sys.tau, id, tol));
  out.push_back(check_relation("tau == tau^dag", sys.tau, dagger(sys.tau), tol));
  return out;
}

std::string to_string(BlockDirection d) {
  return d == BlockDirection::plus_to_minus ? "plus->minus" : "minus->plus";
}

ComplexMatrix TwoComponentForm::reassemble_Q() const {
  ComplexMatrix blocks = ComplexMatrix::Zero(dim_plus + dim_minus,
                                             dim_plus + dim_minus);
  if (direction == BlockDirection::plus_to_minus) {
    blocks.bottomLeftCorner(dim_minus, dim_plus) = D;
  } else {
    blocks.topRightCorner(dim_plus, dim_minus) = D;
  }
  return basis * blocks * basis.adjoint();
}

ComplexMatrix TwoComponentForm::reassemble_H() const {
  ComplexMatrix blocks = ComplexMatrix::Zero(dim_plus + dim_minus,
                                             dim_plus + dim_minus);
  blocks.topLeftCorner(dim_plus, dim_plus) = H_plus;
  blocks.bottomRightCorner(dim_minus, dim_minus) = H_minus;
  return basis * blocks * basis.adjoint();
}

ComplexMatrix TwoComponentForm::reassemble_eta() const {
  ComplexMatrix blocks = ComplexMatrix::Zero(dim_plus + dim_minus,
                                             dim_plus + dim_minus);
  blocks.topLeftCorner(dim_plus, dim_plus) = eta_plus.matrix();
  blocks.bottomRightCorner(dim_minus, dim_minus) = eta_minus.matrix();
  return basis * blocks * basis.adjoint();
}

TwoComponentForm two_component(const PseudoSusySystem& sys, double tol) {
  const Index d = sys.dim();
  if (!is_hermitian(sys.tau, tol)) {
    throw StructureError("grading operator is not Hermitian");
  }

  TwoComponentForm form;
  // Grade basis: + columns then - columns.  When tau is already diagonal the
  // natural coordinates are kept (a permutation), otherwise tau is
  // diagonalized.
  ComplexMatrix offdiag = sys.tau;
  offdiag.diagonal().setZero();
  std::vector<Index> plus_idx, minus_idx;
  if (approx_zero(offdiag, tol, residual_scale(sys.tau))) {
    for (Index k = 0; k < d; ++k) {
      const double lam = sys.tau(k, k).real();
      if (std::abs(std::abs(lam) - 1.0) > tol * residual_scale(sys.tau)) {
        throw StructureError("grading eigenvalues are not +-1");
      }
      (lam > 0 ? plus_idx : minus_idx).push_back(k);
    }
    form.basis = ComplexMatrix::Zero(d, d);
    Index col = 0;
    for (Index k : plus_idx) form.basis(k, col++) = 1.0;
    for (Index k : minus_idx) form.basis(k, col++) = 1.0;
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
        0.5 * (sys.tau + sys.tau.adjoint()));
    for (Index k = 0; k < d; ++k) {
      const double lam = es.eigenvalues()(k);
      if (std::abs(std::abs(lam) - 1.0) > tol * residual_scale(sys.tau)) {
        throw StructureError("grading eigenvalues are not +-1");
      }
      (lam > 0 ? plus_idx : minus_idx).push_back(k);
    }
    form.basis.resize(d, d);
    Index col = 0;
    for (Index k : plus_idx) form.basis.col(col++) = es.eigenvectors().col(k);
    for (Index k : minus_idx) form.basis.col(col++) = es.eigenvectors().col(k);
  }
  form.dim_plus = static_cast<Index>(plus_idx.size());
  form.dim_minus = static_cast<Index>(minus_idx.size());
  const Index dp = form.dim_plus;
  const Index dm = form.dim_minus;
  if (dp == 0 || dm == 0) {
    throw StructureError("grading does not split the space into two sectors");
  }

  const ComplexMatrix h_b = form.basis.adjoint() * sys.H * form.basis;
  const ComplexMatrix q_b = form.basis.adjoint() * sys.Q * form.basis;
  const ComplexMatrix eta_b =
      form.basis.adjoint() * sys.eta.matrix() * form.basis;
  const ComplexMatrix p_b =
      form.basis.adjoint() * sys.protected_projector * form.basis;

  const double h_scale = residual_scale(sys.H);
  const double q_scale = residual_scale(sys.Q);
  const double eta_scale = residual_scale(sys.eta.matrix());
  if (fro_norm(h_b.topRightCorner(dp, dm)) > tol * h_scale ||
      fro_norm(h_b.bottomLeftCorner(dm, dp)) > tol * h_scale) {
    throw StructureError("Hamiltonian couples the grade sectors");
  }
  if (fro_norm(eta_b.topRightCorner(dp, dm)) > tol * eta_scale ||
      fro_norm(eta_b.bottomLeftCorner(dm, dp)) > tol * eta_scale) {
    throw StructureError("metric couples the grade sectors");
  }
  if (fro_norm(q_b.topLeftCorner(dp, dp)) > tol * q_scale ||
      fro_norm(q_b.bottomRightCorner(dm, dm)) > tol * q_scale) {
    throw StructureError("supercharge has grade-diagonal blocks");
  }
  const double p_scale = residual_scale(sys.protected_projector);
  if (fro_norm(p_b.topRightCorner(dp, dm)) > tol * p_scale ||
      fro_norm(p_b.bottomLeftCorner(dm, dp)) > tol * p_scale) {
    throw StructureError("protected projector couples the grade sectors");
  }

  const ComplexMatrix lower = q_b.bottomLeftCorner(dm, dp);  // maps + into -
  const ComplexMatrix upper = q_b.topRightCorner(dp, dm);    // maps - into +
  const bool has_lower = fro_norm(lower) > tol * q_scale;
  const bool has_upper = fro_norm(upper) > tol * q_scale;
  if (has_lower && has_upper) {
    throw StructureError("supercharge has two nonzero off-diagonal blocks");
  }
  form.direction = has_upper ? BlockDirection::minus_to_plus
                             : BlockDirection::plus_to_minus;
  form.D = has_upper ? upper : lower;

  form.eta_plus = MetricOperator::make(eta_b.topLeftCorner(dp, dp), tol);
  form.eta_minus = MetricOperator::make(eta_b.bottomRightCorner(dm, dm), tol);
  form.H_plus = h_b.topLeftCorner(dp, dp);
  form.H_minus = h_b.bottomRightCorner(dm, dm);
  form.P_plus = p_b.topLeftCorner(dp, dp);
  form.P_minus = p_b.bottomRightCorner(dm, dm);

  // D#: the pseudo-adjoint block, mapping opposite to D.
  if (form.direction == BlockDirection::minus_to_plus) {
    form.D_sharp = form.eta_minus.inverse() * form.D.adjoint() *
                   form.eta_plus.matrix();
  } else {
    form.D_sharp = form.eta_plus.inverse() * form.D.adjoint() *
                   form.eta_minus.matrix();
  }

  ComplexMatrix grade_diag = ComplexMatrix::Zero(d, d);
  grade_diag.topLeftCorner(dp, dp) = ComplexMatrix::Identity(dp, dp);
  grade_diag.bottomRightCorner(dm, dm) = -ComplexMatrix::Identity(dm, dm);
  form.checks.push_back(check_relation(
      "tau == diag(1, -1) in the grade basis",
      form.basis.adjoint() * sys.tau * form.basis, grade_diag, tol));

  const ComplexMatrix dds = form.D * form.D_sharp;
  const ComplexMatrix dsd = form.D_sharp * form.D;
  if (form.direction == BlockDirection::minus_to_plus) {
    form.checks.push_back(check_zero(
        "2 H_+ == D D# (protected)",
        form.P_plus * (2.0 * form.H_plus - dds) * form.P_plus, tol,
        residual_scale(form.H_plus, dds)));
    form.checks.push_back(check_zero(
        "2 H_- == D# D (protected)",
        form.P_minus * (2.0 * form.H_minus - dsd) * form.P_minus, tol,
        residual_scale(form.H_minus, dsd)));
  } else {
    form.checks.push_back(check_zero(
        "2 H_+ == D# D (protected)",
        form.P_plus * (2.0 * form.H_plus - dsd) * form.P_plus, tol,
        residual_scale(form.H_plus, dsd)));
    form.checks.push_back(check_zero(
        "2 H_- == D D# (protected)",
        form.P_minus * (2.0 * form.H_minus - dds) * form.P_minus, tol,
        residual_scale(form.H_minus, dds)));
  }

  // The global pseudo-adjoint of Q must reduce to the single block D#.
  ComplexMatrix sharp_blocks = ComplexMatrix::Zero(d, d);
  if (form.direction == BlockDirection::minus_to_plus) {
    sharp_blocks.bottomLeftCorner(dm, dp) = form.D_sharp;
  } else {
    sharp_blocks.topRightCorner(dp, dm) = form.D_sharp;
  }
  form.checks.push_back(check_relation(
      "Q# == block embedding of D#",
      form.basis.adjoint() * pseudo_adjoint(sys.Q, sys.eta) * form.basis,
      sharp_blocks, tol));
  form.checks.push_back(
      check_relation("Q == reassembled blocks", sys.Q, form.reassemble_Q(), tol));
  form.checks.push_back(
      check_relation("H == reassembled blocks", sys.H, form.reassemble_H(), tol));
  form.checks.push_back(check_relation("eta == reassembled blocks",
                                       sys.eta.matrix(), form.reassemble_eta(),
                                       tol));
  return form;
}

std::vector<EigenGroup> eigen_groups(const ComplexMatrix& h, double tol) {
  const EigenDecomposition ed = eig(h, tol);
  if (!ed.diagonalizable) {
    throw NumericError("Hamiltonian is not diagonalizable within tolerance");
  }
  const Index d = h.rows();
  double radius = 0.0;
  for (Index k = 0; k < d; ++k) radius = std::max(radius, std::abs(ed.values(k)));
  const double thresh = defaults::zero_eigenvalue_rel * std::max(1.0, radius);

  std::vector<Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    const Complex va = ed.values(a), vb = ed.values(b);
    if (va.real() != vb.real()) return va.real() < vb.real();
    return va.imag() < vb.imag();
  });

  std::vector<EigenGroup> groups;
  std::vector<Index> cluster;
  Complex sum = 0.0;
  auto flush = [&]() {
    if (cluster.empty()) return;
    const Complex mean = sum / static_cast<double>(cluster.size());
    ComplexMatrix vecs(d, static_cast<Index>(cluster.size()));
    for (std::size_t j = 0; j < cluster.size(); ++j) {
      vecs.col(static_cast<Index>(j)) = ed.vectors.col(cluster[j]);
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(vecs);
    EigenGroup g;
    g.value = mean;
    g.vectors = qr.householderQ() *
                ComplexMatrix::Identity(d, static_cast<Index>(cluster.size()));
    g.real = std::abs(mean.imag()) <= thresh;
    groups.push_back(std::move(g));
    cluster.clear();
    sum = 0.0;
  };
  for (Index idx : order) {
    const Complex v = ed.values(idx);
    if (!cluster.empty()) {
      const Complex mean = sum / static_cast<double>(cluster.size());
      if (std::abs(v - mean) > thresh) flush();
    }
    cluster.push_back(idx);
    sum += v;
  }
  flush();
  return groups;
}

PairingReport pair_spectrum(const PseudoSusySystem& sys, double tol) {
  return pair_groups(sys, eigen_groups(sys.H, tol), tol);
}

PairingReport pair_groups(const PseudoSusySystem& sys,
                          const std::vector<EigenGroup>& groups, double tol) {
  PairingReport report;
  const Index d = sys.dim();
  const ComplexMatrix q_sharp = pseudo_adjoint(sys.Q, sys.eta);
  const ComplexMatrix outside =
      ComplexMatrix::Identity(d, d) - sys.protected_projector;
  const double q_scale = residual_scale(sys.Q);
  const double h_scale = residual_scale(sys.H);

  double radius = 0.0;
  for (const auto& g : groups) radius = std::max(radius, std::abs(g.value));
  const double zero_thresh = defaults::zero_eigenvalue_rel * std::max(1.0, radius);

  double split_residual = 0.0;
  double max_partner_residual = 0.0;
  double max_grade_residual = 0.0;
  double worst_containment = 0.0;  // 1 - ||projection onto tracked eigenspace||
  bool any_pair = false;

  auto is_edge = [&](const ComplexVector& v) {
    return (outside * v).norm() > 0.5;
  };

  std::vector<GradedGroup> graded;
  graded.reserve(groups.size());
  for (const auto& g : groups) {
    graded.push_back(split_by_grade(g, sys.tau));
    split_residual =
        std::max(split_residual, graded.back().grade_split_residual);
  }

  for (auto& g : graded) {
    SpectralLine line;
    line.value = g.value;
    line.multiplicity = static_cast<int>(g.plus.cols() + g.minus.cols());
    for (Index j = 0; j < g.plus.cols(); ++j) line.grades.push_back(+1);
    for (Index j = 0; j < g.minus.cols(); ++j) line.grades.push_back(-1);
    report.spectrum.push_back(std::move(line));

    if (std::abs(g.value) <= zero_thresh) {
      for (Index j = 0; j < g.plus.cols(); ++j) {
        report.unpaired.push_back({g.value, +1, "zero-mode"});
      }
      for (Index j = 0; j < g.minus.cols(); ++j) {
        report.unpaired.push_back({g.value, -1, "zero-mode"});
      }
      continue;
    }
    if (!g.real) continue;  // matched into complex_pairs below

    const double e = g.value.real();
    // Four passes: Q applied to grade -, Q to grade +, then Q# likewise.
    struct Phase {
      const ComplexMatrix* op;
      const char* name;
      int source_grade;
    };
    const Phase phases[] = {{&sys.Q, "Q", -1},
                            {&sys.Q, "Q", +1},
                            {&q_sharp, "Q#", -1},
                            {&q_sharp, "Q#", +1}};
    for (const Phase& phase : phases) {
      ComplexMatrix& source = phase.source_grade < 0 ? g.minus : g.plus;
      ComplexMatrix& target = phase.source_grade < 0 ? g.plus : g.minus;
      Index j = 0;
      while (j < source.cols()) {
        if (target.cols() == 0) break;
        const ComplexVector psi = source.col(j);
        ComplexVector w = (*phase.op) * psi;
        if (w.norm() <= tol * q_scale) {
          ++j;  // annihilated: leave for later phases / unpaired report
          continue;
        }
        w.normalize();
        const ComplexVector coords = target.adjoint() * w;
        if (coords.norm() < 0.5) {
          worst_containment = std::max(worst_containment, 1.0 - coords.norm());
          ++j;
          continue;
        }
        worst_containment = std::max(worst_containment, 1.0 - coords.norm());
        max_partner_residual = std::max(
            max_partner_residual, (sys.H * w - e * w).norm());
        const double target_sign = -phase.source_grade;
        max_grade_residual =
            std::max(max_grade_residual, (sys.tau * w - target_sign * w).norm());
        max_grade_residual = std::max(
            max_grade_residual,
            (sys.tau * psi - static_cast<double>(phase.source_grade) * psi)
                .norm());

        PairEntry entry;
        entry.eigenvalue = e;
        entry.plus = phase.source_grade < 0 ? w : psi;
        entry.minus = phase.source_grade < 0 ? psi : w;
        entry.eta_norm_plus = eta_norm_of(entry.plus, sys.eta.matrix());
        entry.eta_norm_minus = eta_norm_of(entry.minus, sys.eta.matrix());
        entry.produced_by = phase.name;
        entry.source_grade = phase.source_grade;
        entry.edge = is_edge(entry.plus) || is_edge(entry.minus);
        entry.partner_residual = (sys.H * w - e * w).norm();
        report.pairs.push_back(std::move(entry));
        any_pair = true;

        // Consume the source column and the matched target direction.
        ComplexMatrix rest(source.rows(), source.cols() - 1);
        for (Index k = 0, col = 0; k < source.cols(); ++k) {
          if (k != j) rest.col(col++) = source.col(k);
        }
        source = std::move(rest);
        target = deflate(target, coords);
      }
    }
    for (Index j = 0; j < g.plus.cols(); ++j) {
      const bool edge = is_edge(g.plus.col(j));
      report.unpaired.push_back(
          {g.value, +1, edge ? "truncation-edge" : "no-partner"});
    }
    for (Index j = 0; j < g.minus.cols(); ++j) {
      const bool edge = is_edge(g.minus.col(j));
      report.unpaired.push_back(
          {g.value, -1, edge ? "truncation-edge" : "no-partner"});
    }
  }

  // Complex eigenvalues must come in conjugate pairs for a pseudo-Hermitian H.
  std::vector<bool> used(graded.size(), false);
  double conj_mismatch = 0.0;
  bool any_complex = false;
  for (std::size_t i = 0; i < graded.size(); ++i) {
    if (graded[i].real || used[i] || std::abs(graded[i].value) <= zero_thresh) {
      continue;
    }
    any_complex = true;
    used[i] = true;
    bool matched = false;
    for (std::size_t j = 0; j < graded.size(); ++j) {
      if (j == i || used[j] || graded[j].real) continue;
      if (std::abs(graded[j].value - std::conj(graded[i].value)) <= zero_thresh) {
        used[j] = true;
        const Complex first = graded[i].value.imag() > 0 ? graded[i].value
                                                         : graded[j].value;
        const Complex second = first == graded[i].value ? graded[j].value
                                                        : graded[i].value;
        report.complex_pairs.emplace_back(first, second);
        conj_mismatch = std::max(
            conj_mismatch, std::abs(graded[j].value - std::conj(graded[i].value)));
        matched = true;
        break;
      }
    }
    if (!matched) {
      const int k_plus = static_cast<int>(graded[i].plus.cols());
      for (int r = 0; r < static_cast<int>(graded[i].plus.cols() +
                                           graded[i].minus.cols());
           ++r) {
        report.unpaired.push_back(
            {graded[i].value, r < k_plus ? +1 : -1, "no-partner"});
      }
      conj_mismatch = std::max(conj_mismatch, 1.0);
    }
  }

  report.checks.push_back(check_value("grade splits every eigenspace",
                                      split_residual, tol,
                                      residual_scale(sys.tau)));
  if (any_pair) {
    report.checks.push_back(check_value(
        "produced partners are eigenvectors at the same eigenvalue",
        max_partner_residual, tol, h_scale));
    report.checks.push_back(check_value(
        "produced partners stay inside the tracked eigenspace",
        worst_containment, tol, 1.0));
    report.checks.push_back(check_value("paired members have definite grade",
                                        max_grade_residual, tol,
                                        residual_scale(sys.tau)));
  }
  if (any_complex) {
    report.checks.push_back(check_value(
        "complex eigenvalues come in conjugate pairs", conj_mismatch, tol,
        std::max(1.0, radius)));
  }
  return report;
}

SignTheoremVerdict sign_theorem_check(const PseudoSusySystem& sys, double tol) {
  const std::vector<EigenGroup> groups = eigen_groups(sys.H, tol);
  const PairingReport report = pair_groups(sys, groups, tol);
  SignTheoremVerdict v;

  double radius = 0.0;
  for (const auto& g : groups) radius = std::max(radius, std::abs(g.value));
  const double zero_thresh = defaults::zero_eigenvalue_rel * std::max(1.0, radius);
  const double eta_scale = residual_scale(sys.eta.matrix());
  const double sign_floor = tol * eta_scale;

  int failing_pairs = 0;
  for (const PairEntry& p : report.pairs) {
    PairSigns s;
    s.eigenvalue = p.eigenvalue;
    s.sign_plus = std::abs(p.eta_norm_plus) <= sign_floor
                      ? 0
                      : (p.eta_norm_plus > 0 ? 1 : -1);
    s.sign_minus = std::abs(p.eta_norm_minus) <= sign_floor
                       ? 0
                       : (p.eta_norm_minus > 0 ? 1 : -1);
    s.sign_e = p.eigenvalue > 0 ? 1 : -1;
    s.pass = s.sign_plus != 0 && s.sign_minus != 0 &&
             s.sign_plus * s.sign_minus == s.sign_e;
    if (!s.pass) ++failing_pairs;
    v.pair_signs.push_back(s);
  }
  v.checks.push_back(
      {"sign(<<psi+>>) sign(<<psi->>) == sign(E) for every pair",
       static_cast<double>(failing_pairs), 0.5, failing_pairs == 0});

  // Norm transfer <<Q psi|Q psi>> == 2E <<psi|psi>>, quantitative on the
  // pairs whose source grade is annihilated by Q# and which stay inside the
  // protected subspace.
  const ComplexMatrix q_sharp = pseudo_adjoint(sys.Q, sys.eta);
  double transfer_residual = 0.0;
  bool transfer_any = false;
  for (const PairEntry& p : report.pairs) {
    if (p.produced_by != "Q" || p.edge) continue;
    const ComplexVector& psi = p.source_grade < 0 ? p.minus : p.plus;
    if ((q_sharp * psi).norm() > tol * residual_scale(sys.Q)) continue;
    const ComplexVector w = sys.Q * psi;
    const double lhs = eta_norm_of(w, sys.eta.matrix());
    const double rhs = 2.0 * p.eigenvalue * eta_norm_of(psi, sys.eta.matrix());
    transfer_residual = std::max(transfer_residual, std::abs(lhs - rhs));
    transfer_any = true;
  }
  if (transfer_any) {
    v.checks.push_back(check_value(
        "<<Q psi|Q psi>> == 2E <<psi|psi>> (protected pairs)",
        transfer_residual, tol, residual_scale(sys.Q, sys.H) * eta_scale));
  }

  for (const auto& g : groups) {
    if (g.real && g.value.real() < -zero_thresh) {
      v.has_negative_real_eigenvalue = true;
    }
  }
  v.eta_indefinite = sys.eta.indefinite();
  v.theorem_pass = !v.has_negative_real_eigenvalue || v.eta_indefinite;
  v.checks.push_back({"negative real eigenvalue requires indefinite eta",
                      v.theorem_pass ? 0.0 : 1.0, 0.5, v.theorem_pass});

  v.corollary_applicable = approx_equal(sys.eta.matrix(), sys.tau, tol);
  if (v.corollary_applicable) {
    int positive_real = 0;
    for (const auto& g : groups) {
      if (g.real && g.value.real() > zero_thresh) ++positive_real;
    }
    v.corollary_pass = positive_real == 0;
    v.checks.push_back({"eta == tau forces nonzero real eigenvalues negative",
                        static_cast<double>(positive_real), 0.5,
                        v.corollary_pass});
  }

  // Eigenspaces at E1 != conj(E2) are eta-orthogonal.
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (std::abs(std::conj(groups[i].value) - groups[j].value) <= zero_thresh) {
        continue;
      }
      const ComplexMatrix overlap =
          groups[i].vectors.adjoint() * sys.eta.matrix() * groups[j].vectors;
      v.max_cross_group_overlap =
          std::max(v.max_cross_group_overlap, overlap.cwiseAbs().maxCoeff());
    }
  }
  v.checks.push_back(check_value("eigenspaces at E1 != conj(E2) are eta-orthogonal",
                                 v.max_cross_group_overlap, tol, eta_scale));
  return v;
}

}  // namespace phermion
