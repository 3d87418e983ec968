#include "phermion/algebra.hpp"

#include <cmath>
#include <utility>

#include "phermion/rng.hpp"

namespace phermion {

std::string to_string(Species s) {
  switch (s) {
    case Species::boson: return "boson";
    case Species::fermion: return "fermion";
    case Species::phermion: return "phermion";
    case Species::abnormal_phermion: return "abnormal-phermion";
  }
  return "unknown";
}

std::optional<Species> species_from_string(const std::string& name) {
  if (name == "boson") return Species::boson;
  if (name == "fermion") return Species::fermion;
  if (name == "phermion") return Species::phermion;
  if (name == "abnormal-phermion") return Species::abnormal_phermion;
  return std::nullopt;
}

MetricOperator MetricOperator::make(ComplexMatrix eta, double tol) {
  if (eta.rows() != eta.cols()) {
    throw ShapeError("MetricOperator: metric must be square");
  }
  if (!is_hermitian(eta, tol)) {
    throw DomainError("MetricOperator: metric must be Hermitian within tolerance");
  }
  eta = (eta + eta.adjoint()).eval() / 2.0;
  ComplexMatrix inv = phermion::inverse(eta, tol);  // SingularityError on degenerate metrics
  Inertia inertia = inertia_of(eta, tol);
  const double cond = condition_number(eta);
  return MetricOperator(std::move(eta), std::move(inv), inertia, cond);
}

MetricOperator MetricOperator::identity(Index dim) {
  return make(ComplexMatrix::Identity(dim, dim));
}

MetricOperator MetricOperator::sigma3() { return make(phermion::sigma3()); }

MetricOperator MetricOperator::diagonal(const std::vector<double>& entries) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(entries.size()),
                                        static_cast<Index>(entries.size()));
  for (Index i = 0; i < m.rows(); ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return make(std::move(m));
}

ComplexMatrix pseudo_adjoint(const ComplexMatrix& a, const MetricOperator& eta) {
  if (a.rows() != a.cols()) throw ShapeError("pseudo_adjoint: matrix must be square");
  if (a.rows() != eta.dim()) {
    throw ShapeError("pseudo_adjoint: operator and metric dimensions differ");
  }
  return eta.inverse() * a.adjoint() * eta.matrix();
}

ComplexMatrix LadderRep::number() const {
  return static_cast<double>(epsilon) * (c_sharp() * c);
}

ComplexMatrix two_level_annihilator() {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  return a;
}

ComplexMatrix sigma1() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix sigma2() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix sigma3() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

LadderRep make_fermion() {
  LadderRep rep;
  rep.species = Species::fermion;
  rep.c = two_level_annihilator();
  rep.eta = MetricOperator::identity(2);
  rep.epsilon = +1;
  return rep;
}

LadderRep make_phermion(const ComplexMatrix& eta2, double tol) {
  if (eta2.rows() != 2 || eta2.cols() != 2) {
    throw ShapeError("make_phermion: metric must be 2x2");
  }
  MetricOperator metric = MetricOperator::make(eta2, tol);
  if (metric.indefinite()) {
    throw AlgebraObstruction(
        "make_phermion: no two-level representation satisfies {c, c#} = 1 with an "
        "indefinite metric; for every nilpotent c the anticommutator is "
        "-(|u|-|v|)^2 * 1 (see obstruction_demo), so the gap to +1 is at least 1",
        1.0, "obstruction_demo");
  }
  bool negated = false;
  if (metric.negative_definite()) {
    // Only the sign convention changes: -eta induces the same pseudo-adjoint.
    metric = MetricOperator::make(-metric.matrix(), tol);
    negated = true;
  }
  const ComplexMatrix root = sqrt_pos_def(metric.matrix(), tol);
  const ComplexMatrix root_inv = inverse(root, tol);
  LadderRep rep;
  rep.species = Species::phermion;
  rep.c = root_inv * two_level_annihilator() * root;
  rep.eta = std::move(metric);
  rep.epsilon = +1;
  rep.metric_negated = negated;
  return rep;
}

LadderRep make_abnormal_phermion() {
  LadderRep rep;
  rep.species = Species::abnormal_phermion;
  rep.c = Complex(0, 1) * two_level_annihilator();
  rep.eta = MetricOperator::sigma3();
  rep.epsilon = -1;
  return rep;
}

LadderRep make_boson(int truncation) {
  if (truncation < 2) {
    throw ConfigError("make_boson: truncation must be at least 2");
  }
  const Index dim = truncation + 1;
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (Index k = 1; k < dim; ++k) {
    a(k - 1, k) = std::sqrt(static_cast<double>(k));
  }
  LadderRep rep;
  rep.species = Species::boson;
  rep.c = std::move(a);
  rep.eta = MetricOperator::identity(dim);
  rep.epsilon = +1;
  rep.truncation = truncation;
  return rep;
}

ComplexMatrix below_top_projector(int truncation) {
  const Index dim = truncation + 1;
  ComplexMatrix p = ComplexMatrix::Identity(dim, dim);
  p(dim - 1, dim - 1) = 0.0;
  return p;
}

std::vector<RelationResidual> verify_species(const LadderRep& rep, double tol) {
  std::vector<RelationResidual> out;
  const ComplexMatrix& c = rep.c;
  const ComplexMatrix cs = rep.c_sharp();
  const ComplexMatrix n = rep.number();
  const ComplexMatrix one = ComplexMatrix::Identity(rep.dim(), rep.dim());
  const double eps = static_cast<double>(rep.epsilon);

  if (rep.species == Species::boson) {
    const int t = rep.truncation.value();
    const ComplexMatrix p = below_top_projector(t);
    ComplexMatrix top = ComplexMatrix::Zero(rep.dim(), rep.dim());
    top(rep.dim() - 1, rep.dim() - 1) = 1.0;
    const ComplexMatrix comm = commutator(c, cs);
    out.push_back(check_relation("[c, c#] == 1 (below top level)", p * comm * p,
                                 p * one * p, tol));
    out.push_back(check_relation("[c, c#] == 1 - (t+1) P_top (truncation artifact)", comm,
                                 one - static_cast<double>(t + 1) * top, tol));
  } else {
    out.push_back(check_zero("c^2 == 0", c * c, tol, fro_norm(c) * fro_norm(c)));
    out.push_back(check_zero("(c#)^2 == 0", cs * cs, tol, fro_norm(cs) * fro_norm(cs)));
    out.push_back(check_relation("{c, c#} == eps 1", anticommutator(c, cs), eps * one, tol));
    out.push_back(
        check_relation("[c, c#] == eps (1 - 2 n)", commutator(c, cs), eps * (one - 2.0 * n), tol));
  }
  out.push_back(check_relation("n# == n", pseudo_adjoint(n, rep.eta), n, tol));
  out.push_back(check_relation("[c, n] == c", commutator(c, n), c, tol));
  out.push_back(check_relation("[c#, n] == -c#", commutator(cs, n), ComplexMatrix(-cs), tol));
  return out;
}

bool MetricClassification::any_definite_basis_element() const {
  for (const auto& sol : basis) {
    if (sol.inertia.definite()) return true;
  }
  return false;
}

namespace {

// Real basis of the Hermitian d x d matrices: d diagonal units, then for
// each i<j the symmetric and antisymmetric (i*) off-diagonal pair.
std::vector<ComplexMatrix> hermitian_basis(Index d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d * d));
  for (Index i = 0; i < d; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(i, i) = 1.0;
    basis.push_back(std::move(e));
  }
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(i, j) = 1.0;
      e(j, i) = 1.0;
      basis.push_back(e);
      e.setZero();
      e(i, j) = Complex(0, -1);
      e(j, i) = Complex(0, 1);
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

}  // namespace

MetricClassification classify_metrics(const ComplexMatrix& c, const ComplexMatrix& c_star,
                                      double tol, std::uint64_t seed) {
  if (c.rows() != c.cols() || c_star.rows() != c_star.cols() || c.rows() != c_star.rows()) {
    throw ShapeError("classify_metrics: c and c* must be square and of equal dimension");
  }
  if (fro_norm(c) <= tol) {
    throw DomainError("classify_metrics: annihilator must be nonzero");
  }
  if (!approx_zero(c * c, tol, fro_norm(c) * fro_norm(c))) {
    throw DomainError("classify_metrics: annihilator must be nilpotent (c^2 = 0)");
  }
  const Index d = c.rows();
  const auto basis = hermitian_basis(d);
  // Real-linear constraint eta c* - c^dag eta = 0, vectorized over [Re; Im].
  Eigen::MatrixXd a(2 * d * d, static_cast<Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const ComplexMatrix m = basis[k] * c_star - c.adjoint() * basis[k];
    Index r = 0;
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        a(r, static_cast<Index>(k)) = m(i, j).real();
        a(r + d * d, static_cast<Index>(k)) = m(i, j).imag();
        ++r;
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double thr = tol * std::max(1.0, smax);

  MetricClassification out;
  for (Index k = 0; k < static_cast<Index>(basis.size()); ++k) {
    if (k < sv.size() && sv(k) > thr) continue;
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      m += svd.matrixV()(static_cast<Index>(b), k) * basis[b];
    }
    m = (m + m.adjoint()).eval() / 2.0;
    m /= fro_norm(m);
    out.basis.push_back({m, inertia_of(m, tol)});
  }
  if (!out.basis.empty()) {
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> mag(0.3, 1.0);
    std::bernoulli_distribution flip(0.5);
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (const auto& sol : out.basis) {
      m += (flip(rng) ? 1.0 : -1.0) * mag(rng) * sol.eta;
    }
    m /= fro_norm(m);
    out.generic = MetricSolution{m, inertia_of(m, tol)};
  }
  return out;
}

ComplexMatrix obstruction_demo(Complex u, Complex v, double tol) {
  if (std::abs(u * v) <= tol) {
    throw DomainError("obstruction_demo: u v must be nonzero");
  }
  // Nilpotency fixes the diagonal: sigma^2 = (s^2 + u v) 1, so s = i sqrt(uv).
  const Complex s = Complex(0, 1) * std::sqrt(u * v);
  ComplexMatrix sig(2, 2);
  sig << s, u, v, -s;
  if (!approx_zero(sig * sig, tol, fro_norm(sig) * fro_norm(sig))) {
    throw NumericError("obstruction_demo: nilpotency construction failed");
  }
  const ComplexMatrix s3 = sigma3();
  return anticommutator(sig, s3 * sig.adjoint() * s3);
}

ComplexMatrix obstruction_expected(Complex u, Complex v) {
  const double gap = std::abs(u) - std::abs(v);
  return -gap * gap * ComplexMatrix::Identity(2, 2);
}

ComplexMatrix phermion_to_fermion_map(const ComplexMatrix& eta2, double tol) {
  if (eta2.rows() != 2 || eta2.cols() != 2) {
    throw ShapeError("phermion_to_fermion_map: metric must be 2x2");
  }
  MetricOperator metric = MetricOperator::make(eta2, tol);
  if (!metric.positive_definite()) {
    throw DomainError(
        "phermion_to_fermion_map: metric must be positive definite (got " +
        std::string(metric.indefinite() ? "indefinite" : "non-positive") + " signature)");
  }
  return sqrt_pos_def(metric.matrix(), tol);
}

}  // namespace phermion
