#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "phermion/algebra.hpp"
#include "phermion/matops.hpp"
#include "phermion/oscillator.hpp"
#include "phermion/pseudosusy.hpp"
#include "phermion/rng.hpp"

using namespace phermion;

TEST_CASE("pseudo-adjoint is an involution and an anti-homomorphism",
          "[properties]") {
  Rng rng = make_rng();
  double worst_involution = 0.0;
  double worst_product = 0.0;
  for (int k = 0; k < 500; ++k) {
    const Index dim = 2 + static_cast<Index>(k % 5);
    const MetricOperator eta =
        MetricOperator::make(random_metric(dim, rng, k % 2 == 0));
    const ComplexMatrix a = random_matrix(dim, rng);
    const ComplexMatrix b = random_matrix(dim, rng);

    const ComplexMatrix a_sharp = pseudo_adjoint(a, eta);
    const double r1 = fro_norm(ComplexMatrix(pseudo_adjoint(a_sharp, eta) - a)) /
                      (residual_scale(a) * eta.condition());
    worst_involution = std::max(worst_involution, r1);

    const ComplexMatrix lhs = pseudo_adjoint(ComplexMatrix(a * b), eta);
    const ComplexMatrix rhs =
        pseudo_adjoint(b, eta) * pseudo_adjoint(a, eta);
    const double r2 = fro_norm(ComplexMatrix(lhs - rhs)) /
                      (residual_scale(a, b) * eta.condition());
    worst_product = std::max(worst_product, r2);
  }
  REQUIRE(worst_involution <= 1e-10);
  REQUIRE(worst_product <= 1e-10);
}

TEST_CASE("inertia is a congruence invariant", "[properties]") {
  Rng rng = make_rng();
  for (int k = 0; k < 100; ++k) {
    const Index dim = 2 + static_cast<Index>(k % 5);
    const ComplexMatrix h = random_metric(dim, rng, k % 3 == 0);
    const ComplexMatrix s = random_invertible(dim, rng);
    const Inertia before = inertia_of(h);
    const Inertia after = inertia_of(ComplexMatrix(dagger(s) * h * s));
    REQUIRE((before == after));
  }
}

TEST_CASE("kron satisfies the mixed-product identity", "[properties]") {
  Rng rng = make_rng();
  for (int k = 0; k < 50; ++k) {
    const Index da = 2 + static_cast<Index>(k % 3);
    const Index db = 2 + static_cast<Index>((k / 3) % 3);
    const ComplexMatrix a = random_matrix(da, rng);
    const ComplexMatrix c = random_matrix(da, rng);
    const ComplexMatrix b = random_matrix(db, rng);
    const ComplexMatrix d = random_matrix(db, rng);
    const ComplexMatrix lhs = kron(a, b) * kron(c, d);
    const ComplexMatrix rhs = kron(ComplexMatrix(a * c), ComplexMatrix(b * d));
    REQUIRE(approx_zero(ComplexMatrix(lhs - rhs), 1e-10,
                        residual_scale(lhs, rhs)));
  }
}

TEST_CASE("eigendecompositions reconstruct their input", "[properties]") {
  Rng rng = make_rng();
  for (int k = 0; k < 50; ++k) {
    const Index dim = 2 + static_cast<Index>(k % 5);
    const ComplexMatrix a = k % 2 == 0 ? random_matrix(dim, rng)
                                       : random_hermitian(dim, rng);
    const EigenDecomposition ed = eig(a);
    REQUIRE(ed.diagonalizable);
    const ComplexMatrix lambda = ed.values.asDiagonal();
    REQUIRE(approx_zero(ComplexMatrix(a * ed.vectors - ed.vectors * lambda),
                        1e-9, residual_scale(a)));
    if (k % 2 == 1) {
      // Hermitian input: orthonormal eigenvectors, real spectrum.
      REQUIRE(approx_zero(
          ComplexMatrix(dagger(ed.vectors) * ed.vectors -
                        ComplexMatrix::Identity(dim, dim))));
      REQUIRE(ed.values.imag().cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("positive square roots square back", "[properties]") {
  Rng rng = make_rng();
  for (int k = 0; k < 50; ++k) {
    const Index dim = 2 + static_cast<Index>(k % 4);
    ComplexMatrix h = random_metric(dim, rng, true);
    if (inertia_of(h).negative_definite()) h = -h;
    const ComplexMatrix s = sqrt_pos_def(h);
    REQUIRE(approx_equal(s, dagger(s)));
    REQUIRE(approx_zero(ComplexMatrix(s * s - h), 1e-10, residual_scale(h)));
  }
}

TEST_CASE("metric operators invert exactly within tolerance", "[properties]") {
  Rng rng = make_rng();
  for (int k = 0; k < 50; ++k) {
    const Index dim = 2 + static_cast<Index>(k % 5);
    const MetricOperator eta =
        MetricOperator::make(random_metric(dim, rng, k % 2 == 0));
    REQUIRE(approx_zero(
        ComplexMatrix(eta.matrix() * eta.inverse() -
                      ComplexMatrix::Identity(dim, dim)),
        1e-10, eta.condition()));
    REQUIRE(eta.inertia().dim() == static_cast<int>(dim));
    REQUIRE_FALSE(eta.inertia().singular());
  }
}

TEST_CASE("two-component forms reassemble every oscillator", "[properties]") {
  ComplexMatrix eta2 = ComplexMatrix::Zero(2, 2);
  eta2(0, 0) = 4.0;
  eta2(1, 1) = 1.0;
  for (const int t : {4, 8}) {
    const CompositeSystem systems[] = {
        build_boson_fermion(1.0, t),
        build_boson_phermion(1.0, t, eta2),
        build_boson_abnormal_phermion(-1.0, t),
    };
    for (const CompositeSystem& base : systems) {
      const PseudoSusySystem sys(base);
      const TwoComponentForm form = two_component(sys, 1e-10);
      REQUIRE(all_pass(form.checks));
      REQUIRE(approx_zero(ComplexMatrix(form.reassemble_Q() - sys.Q), 1e-11,
                          residual_scale(sys.Q)));
      REQUIRE(approx_zero(ComplexMatrix(form.reassemble_H() - sys.H), 1e-11,
                          residual_scale(sys.H)));
      REQUIRE(approx_zero(
          ComplexMatrix(form.reassemble_eta() - sys.eta.matrix()), 1e-11,
          residual_scale(sys.eta.matrix())));
      // The two metric blocks inherit the factor metric's inertia split.
      REQUIRE(form.eta_plus.dim() + form.eta_minus.dim() == sys.dim());
    }
  }
}

TEST_CASE("pairing is stable under random remixing of eigenbases",
          "[properties]") {
  Rng rng = make_rng();
  const PseudoSusySystem sys(build_boson_fermion(1.0, 6));
  auto groups = eigen_groups(sys.H, 1e-10);
  // Remix each degenerate eigenspace by a random unitary; the pairing works
  // with the spanned spaces, not the particular columns.
  for (auto& g : groups) {
    const Index d = g.vectors.cols();
    if (d < 2) continue;
    const ComplexMatrix u = random_unitary(d, rng);
    g.vectors = g.vectors * u;
  }
  const PairingReport rep = pair_groups(sys, groups, 1e-10);
  REQUIRE(all_pass(rep.checks));
  REQUIRE(rep.pairs.size() == 6);
  for (const auto& p : rep.pairs) REQUIRE(p.produced_by == "Q");
}
