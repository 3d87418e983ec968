#include "phermion/oscillator.hpp"

#include <cmath>

namespace phermion {

namespace {

CompositeSystem assemble(LadderRep boson, LadderRep partner, double E) {
  CompositeSystem sys;
  sys.E = E;
  sys.truncation = boson.truncation.value();
  sys.dim = boson.dim() * partner.dim();

  const ComplexMatrix ib = ComplexMatrix::Identity(boson.dim(), boson.dim());
  const ComplexMatrix i2 = ComplexMatrix::Identity(partner.dim(), partner.dim());
  const ComplexMatrix nb = boson.number();
  const ComplexMatrix n2 = partner.number();

  sys.H = E * (kron(nb, i2) + kron(ib, n2));
  sys.Q = std::sqrt(2.0 * std::abs(E)) * kron(boson.c_sharp(), partner.c);
  sys.tau = kron(ib, i2 - 2.0 * n2);
  sys.eta = MetricOperator::make(kron(boson.eta.matrix(), partner.eta.matrix()));
  sys.protected_projector = kron(below_top_projector(sys.truncation), i2);

  sys.lifted_ops[{0, "c"}] = kron(boson.c, i2);
  sys.lifted_ops[{0, "c#"}] = kron(boson.c_sharp(), i2);
  sys.lifted_ops[{0, "n"}] = kron(nb, i2);
  sys.lifted_ops[{1, "c"}] = kron(ib, partner.c);
  sys.lifted_ops[{1, "c#"}] = kron(ib, partner.c_sharp());
  sys.lifted_ops[{1, "n"}] = kron(ib, n2);

  sys.factors.push_back(std::move(boson));
  sys.factors.push_back(std::move(partner));
  return sys;
}

}  // namespace

ComplexMatrix CompositeSystem::lift(std::size_t factor, const ComplexMatrix& op) const {
  if (factor >= factors.size()) {
    throw RangeError("CompositeSystem::lift: factor index out of range");
  }
  if (op.rows() != factors[factor].dim() || op.cols() != factors[factor].dim()) {
    throw ShapeError("CompositeSystem::lift: operator does not match factor dimension");
  }
  ComplexMatrix m = ComplexMatrix::Identity(1, 1);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const Index d = factors[f].dim();
    m = kron(m, f == factor ? op : ComplexMatrix::Identity(d, d));
  }
  return m;
}

CompositeSystem build_boson_fermion(double E, int truncation) {
  if (!(E > 0)) {
    throw ConfigError("build_boson_fermion: E must be positive");
  }
  return assemble(make_boson(truncation), make_fermion(), E);
}

CompositeSystem build_boson_phermion(double E, int truncation, const ComplexMatrix& eta2,
                                     double tol) {
  if (!(E > 0)) {
    throw ConfigError("build_boson_phermion: E must be positive");
  }
  return assemble(make_boson(truncation), make_phermion(eta2, tol), E);
}

CompositeSystem build_boson_abnormal_phermion(double E, int truncation) {
  if (!(E < 0)) {
    throw ConfigError("build_boson_abnormal_phermion: E must be negative");
  }
  return assemble(make_boson(truncation), make_abnormal_phermion(), E);
}

BasisState basis_state(const CompositeSystem& sys, int boson_level, int grade) {
  if (boson_level < 0 || boson_level > sys.truncation) {
    throw RangeError("basis_state: boson level outside 0..truncation");
  }
  if (grade != +1 && grade != -1) {
    throw ConfigError("basis_state: grade must be +1 or -1");
  }
  ComplexVector v = ComplexVector::Zero(sys.dim);
  v(0) = 1.0;  // |0, +>: both factors in their ground state
  if (grade == -1) {
    v = sys.lifted_ops.at({1, "c#"}) * v;
  }
  const ComplexMatrix ad = sys.lifted_ops.at({0, "c#"});
  for (int k = 0; k < boson_level; ++k) v = ad * v;
  const double norm = v.norm();
  if (norm <= 0) {
    throw NumericError("basis_state: construction produced the zero vector");
  }
  v /= norm;
  BasisState state;
  state.vector = v;
  state.boson_level = boson_level;
  state.grade = grade;
  state.eta_norm = (v.adjoint() * sys.eta.matrix() * v)(0, 0).real();
  return state;
}

}  // namespace phermion
