#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <string>

#include "phermion/errors.hpp"
#include "phermion/pseudosusy.hpp"

using namespace phermion;

namespace {

bool has_check(const std::vector<RelationResidual>& checks,
               const std::string& name, bool want_pass) {
  for (const auto& c : checks) {
    if (c.relation_name == name) return c.pass == want_pass;
  }
  return false;
}

}  // namespace

TEST_CASE("boson-fermion system satisfies the superalgebra", "[pseudosusy]") {
  const PseudoSusySystem sys(build_boson_fermion(1.0, 8));
  const auto checks = verify_algebra(sys, 1e-10);
  REQUIRE(all_pass(checks));
  REQUIRE(has_check(checks, "Q^2 == 0", true));
  REQUIRE(has_check(checks, "{Q, Q#} == 2H (protected)", true));
  REQUIRE(has_check(checks, "{tau, Q} == 0", true));
}

TEST_CASE("two-component form of the boson-fermion system", "[pseudosusy]") {
  const PseudoSusySystem sys(build_boson_fermion(1.0, 8));
  const TwoComponentForm form = two_component(sys, 1e-10);
  REQUIRE(form.dim_plus == 9);
  REQUIRE(form.dim_minus == 9);
  // The oscillator supercharge raises the grade.
  REQUIRE(form.direction == BlockDirection::minus_to_plus);
  // D = sqrt(2) a^dag on 9 levels: |D|_F^2 = 2 (1 + ... + 8) = 72.
  REQUIRE(fro_norm(form.D) == Catch::Approx(std::sqrt(72.0)));
  REQUIRE(all_pass(form.checks));

  REQUIRE(approx_zero(ComplexMatrix(form.reassemble_Q() - sys.Q), 1e-11,
                      residual_scale(sys.Q)));
  REQUIRE(approx_zero(ComplexMatrix(form.reassemble_H() - sys.H), 1e-11,
                      residual_scale(sys.H)));
  REQUIRE(approx_zero(ComplexMatrix(form.reassemble_eta() - sys.eta.matrix()),
                      1e-11, residual_scale(sys.eta.matrix())));
}

TEST_CASE("swapping the supercharge flips the block direction",
          "[pseudosusy]") {
  const CompositeSystem base = build_boson_fermion(1.0, 6);
  const ComplexMatrix q_sharp =
      pseudo_adjoint(base.Q, base.eta);
  const PseudoSusySystem mirrored(base.H, q_sharp, base.tau, base.eta,
                                  base.protected_projector);
  REQUIRE(all_pass(verify_algebra(mirrored, 1e-10)));
  const TwoComponentForm form = two_component(mirrored, 1e-10);
  REQUIRE(form.direction == BlockDirection::plus_to_minus);
  REQUIRE(all_pass(form.checks));
  REQUIRE(approx_zero(ComplexMatrix(form.reassemble_Q() - q_sharp), 1e-11,
                      residual_scale(q_sharp)));
}

TEST_CASE("grade leakage is rejected", "[pseudosusy]") {
  const CompositeSystem base = build_boson_fermion(1.0, 4);
  ComplexMatrix h_bad = base.H;
  // Couple the sectors: add sigma1 on the two-level factor.
  ComplexMatrix s1 = ComplexMatrix::Zero(2, 2);
  s1(0, 1) = 1.0;
  s1(1, 0) = 1.0;
  h_bad += 0.1 * base.lift(1, s1);
  const PseudoSusySystem bad(h_bad, base.Q, base.tau, base.eta,
                             base.protected_projector);
  REQUIRE_THROWS_AS(two_component(bad, 1e-10), StructureError);

  ComplexMatrix tau_bad = base.tau;
  tau_bad(0, 1) = 0.5;  // not Hermitian, not an involution
  const PseudoSusySystem bad2(base.H, base.Q, tau_bad, base.eta,
                              base.protected_projector);
  REQUIRE_THROWS_AS(two_component(bad2, 1e-10), StructureError);
}

TEST_CASE("a wrong-direction supercharge fails the algebra loudly",
          "[pseudosusy]") {
  const CompositeSystem base = build_boson_fermion(1.0, 8);
  // Creator x creator: still nilpotent and grade-odd, but it raises both
  // factors, so it cannot close the superalgebra on H.
  const ComplexMatrix a_dag = dagger(base.factors[0].c);
  const ComplexMatrix c_dag = dagger(base.factors[1].c);
  const ComplexMatrix q_bad =
      std::sqrt(2.0) * kron(a_dag, c_dag);
  const PseudoSusySystem bad(base.H, q_bad, base.tau, base.eta,
                             base.protected_projector);
  const auto checks = verify_algebra(bad, 1e-10);
  REQUIRE_FALSE(all_pass(checks));
  REQUIRE(has_check(checks, "Q^2 == 0", true));
  REQUIRE(has_check(checks, "{tau, Q} == 0", true));
  REQUIRE(has_check(checks, "{Q, Q#} == 2H (protected)", false));
  REQUIRE(has_check(checks, "[Q, H] == 0", false));
}

TEST_CASE("eigen groups cluster and orthonormalize", "[pseudosusy]") {
  ComplexMatrix d = ComplexMatrix::Zero(5, 5);
  d(0, 0) = 0.0;
  d(1, 1) = 1.0;
  d(2, 2) = 1.0 + 1e-12;  // clusters with the previous eigenvalue
  d(3, 3) = 2.0;
  d(4, 4) = Complex(0, 3);
  const auto groups = eigen_groups(d, 1e-10);
  REQUIRE(groups.size() == 4);
  int total = 0;
  for (const auto& g : groups) {
    total += static_cast<int>(g.vectors.cols());
    REQUIRE(approx_zero(
        ComplexMatrix(dagger(g.vectors) * g.vectors -
                      ComplexMatrix::Identity(g.vectors.cols(),
                                              g.vectors.cols()))));
  }
  REQUIRE(total == 5);

  ComplexMatrix jordan = ComplexMatrix::Zero(2, 2);
  jordan(0, 1) = 1.0;
  REQUIRE_THROWS_AS(eigen_groups(jordan, 1e-10), NumericError);
}

TEST_CASE("boson-fermion spectrum pairs across grades", "[pseudosusy]") {
  const PseudoSusySystem sys(build_boson_fermion(1.0, 8));
  const PairingReport rep = pair_spectrum(sys, 1e-10);
  REQUIRE(all_pass(rep.checks));

  // Levels: 0 once, 1..8 twice, 9 once (the truncation edge).
  REQUIRE(rep.spectrum.size() == 10);
  REQUIRE(rep.spectrum.front().multiplicity == 1);
  REQUIRE(rep.spectrum.back().multiplicity == 1);
  for (std::size_t k = 1; k + 1 < rep.spectrum.size(); ++k) {
    REQUIRE(rep.spectrum[k].multiplicity == 2);
    REQUIRE(rep.spectrum[k].value.real() == Catch::Approx(double(k)));
  }

  REQUIRE(rep.pairs.size() == 8);
  for (const auto& p : rep.pairs) {
    REQUIRE(p.produced_by == "Q");
    REQUIRE(p.source_grade == -1);
    // Q sends the grade-minus E=8 member to the top boson level, so that
    // pair alone is flagged as touching the truncation edge.
    REQUIRE(p.edge == (p.eigenvalue > 7.5));
    REQUIRE(p.partner_residual <= 1e-10 * residual_scale(sys.H));
    REQUIRE(p.eta_norm_plus > 0.0);
    REQUIRE(p.eta_norm_minus > 0.0);
  }

  REQUIRE(rep.unpaired.size() == 2);
  std::set<std::string> reasons;
  for (const auto& u : rep.unpaired) reasons.insert(u.reason);
  REQUIRE(reasons.count("zero-mode") == 1);
  REQUIRE(reasons.count("truncation-edge") == 1);
  REQUIRE(rep.complex_pairs.empty());
}

TEST_CASE("abnormal oscillator: negative spectrum and sign relation",
          "[pseudosusy]") {
  const PseudoSusySystem sys(build_boson_abnormal_phermion(-1.0, 8));
  REQUIRE(all_pass(verify_algebra(sys, 1e-10)));

  const PairingReport rep = pair_spectrum(sys, 1e-10);
  REQUIRE(all_pass(rep.checks));
  REQUIRE(rep.pairs.size() == 8);
  for (const auto& p : rep.pairs) {
    REQUIRE(p.eigenvalue < 0.0);
    // Negative pair energies force opposite eta-norm signs.
    REQUIRE(p.eta_norm_plus * p.eta_norm_minus < 0.0);
  }

  const SignTheoremVerdict verdict = sign_theorem_check(sys, 1e-10);
  REQUIRE(all_pass(verdict.checks));
  REQUIRE(verdict.has_negative_real_eigenvalue);
  REQUIRE(verdict.eta_indefinite);
  REQUIRE(verdict.theorem_pass);
  // Here the metric equals the grading, so every nonzero energy is negative.
  REQUIRE(verdict.corollary_applicable);
  REQUIRE(verdict.corollary_pass);
  for (const auto& s : verdict.pair_signs) {
    REQUIRE(s.pass);
    REQUIRE(s.sign_plus * s.sign_minus == s.sign_e);
    REQUIRE(s.sign_e == -1);
  }
}

TEST_CASE("positive systems satisfy the sign theorem vacuously",
          "[pseudosusy]") {
  const PseudoSusySystem sys(build_boson_fermion(1.0, 8));
  const SignTheoremVerdict verdict = sign_theorem_check(sys, 1e-10);
  REQUIRE(all_pass(verdict.checks));
  REQUIRE_FALSE(verdict.has_negative_real_eigenvalue);
  REQUIRE_FALSE(verdict.eta_indefinite);
  REQUIRE(verdict.theorem_pass);
  REQUIRE_FALSE(verdict.corollary_applicable);
  for (const auto& s : verdict.pair_signs) {
    REQUIRE(s.pass);
    REQUIRE(s.sign_e == +1);
  }
  REQUIRE(verdict.max_cross_group_overlap <= 1e-8);
}
