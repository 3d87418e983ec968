// Acceptance gate: every contract-level claim in one framework-free binary.
// Each line is "PASS name" or "FAIL name"; exit 0 iff nothing failed.
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "phermion/algebra.hpp"
#include "phermion/liealg.hpp"
#include "phermion/multiphermion.hpp"
#include "phermion/oscillator.hpp"
#include "phermion/pseudosusy.hpp"
#include "phermion/rng.hpp"
#include "phermion/suite.hpp"

using namespace phermion;

namespace {

int failures = 0;

void line(bool pass, const std::string& name) {
  std::printf("%s  %s\n", pass ? "PASS" : "FAIL", name.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

void criterion_species_relations() {
  const auto t0 = std::chrono::steady_clock::now();
  line(all_pass(verify_species(make_fermion(), 1e-12)),
       "fermion relations at 1e-12");
  line(all_pass(verify_species(make_phermion(diag2(4, 1)), 1e-12)),
       "phermion relations for eta = diag(4,1) at 1e-12");
  line(all_pass(verify_species(make_abnormal_phermion(), 1e-12)),
       "abnormal-phermion relations at 1e-12");
  line(all_pass(verify_species(make_boson(8), 1e-12)),
       "truncated boson relations at 1e-12");
  line(seconds_since(t0) < 1.0, "species relations complete within 1s");
}

void criterion_metric_classification() {
  const ComplexMatrix alpha = two_level_annihilator();
  const Complex i(0, 1);

  const MetricClassification normal = classify_metrics(alpha, dagger(alpha));
  bool ok = normal.basis.size() == 1 && normal.any_definite_basis_element();
  if (ok) {
    const ComplexMatrix& b = normal.basis.front().eta;
    ok = fro_norm(ComplexMatrix(
             b - b(0, 0) * ComplexMatrix::Identity(2, 2))) <= 1e-10;
  }
  line(ok, "ladder pair (a, a^dag): metric solutions are the definite line");

  const MetricClassification abnormal = classify_metrics(
      ComplexMatrix(i * alpha), ComplexMatrix(i * dagger(alpha)));
  ok = abnormal.basis.size() == 1 &&
       abnormal.basis.front().inertia == Inertia{1, 1, 0} &&
       !abnormal.any_definite_basis_element();
  if (ok) {
    const ComplexMatrix& b = abnormal.basis.front().eta;
    ok = fro_norm(ComplexMatrix(b - b(0, 0) * sigma3())) <= 1e-10;
  }
  line(ok,
       "ladder pair (ia, ia^dag): metric solutions are the sigma3 line, "
       "inertia (1,1,0)");

  Rng rng = make_rng();
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Complex u = random_complex(rng, -2.0, 2.0);
    const Complex v = random_complex(rng, -2.0, 2.0);
    const ComplexMatrix got = obstruction_demo(u, v);
    const ComplexMatrix want = obstruction_expected(u, v);
    worst = std::max(worst, fro_norm(ComplexMatrix(got - want)) /
                                residual_scale(got));
  }
  line(worst <= 1e-10,
       "100 random (u,v): {sigma, sigma3 sigma^dag sigma3} == -(|u|-|v|)^2 1 "
       "within 1e-10");
}

void criterion_boson_fermion_tower() {
  const auto t0 = std::chrono::steady_clock::now();
  const PseudoSusySystem sys(build_boson_fermion(1.0, 8));

  line(all_pass(verify_algebra(sys, 1e-10)),
       "boson-fermion superalgebra residuals within 1e-10 (protected)");

  const PairingReport rep = pair_spectrum(sys, 1e-10);
  line(all_pass(rep.checks), "boson-fermion pairing structure checks");

  bool spectrum_ok = rep.spectrum.size() == 10;
  if (spectrum_ok) {
    for (std::size_t k = 0; k < rep.spectrum.size(); ++k) {
      const auto& l = rep.spectrum[k];
      const int want_mult = (k == 0 || k == 9) ? 1 : 2;
      spectrum_ok = spectrum_ok && l.multiplicity == want_mult &&
                    std::abs(l.value - Complex(double(k), 0)) <= 1e-8;
    }
  }
  line(spectrum_ok,
       "spectrum is {0 x1} + {n x2, n=1..8} + {9 x1 truncation edge}");

  bool pairs_ok = rep.pairs.size() == 8;
  for (const auto& p : rep.pairs) {
    // Only the E=8 pair touches the top boson level, so only it is flagged.
    const bool want_edge = std::abs(p.eigenvalue - 8.0) <= 1e-8;
    pairs_ok = pairs_ok && p.produced_by == "Q" && p.edge == want_edge &&
               p.partner_residual <= 1e-10 * residual_scale(sys.H);
  }
  line(pairs_ok, "all 8 degenerate pairs are produced by Q from grade -");

  bool unpaired_ok = rep.unpaired.size() == 2;
  if (unpaired_ok) {
    int zero_modes = 0, edges = 0;
    for (const auto& u : rep.unpaired) {
      if (u.reason == "zero-mode" && std::abs(u.value) <= 1e-8 &&
          u.grade == +1) {
        ++zero_modes;
      }
      if (u.reason == "truncation-edge" &&
          std::abs(u.value - Complex(9, 0)) <= 1e-8 && u.grade == -1) {
        ++edges;
      }
    }
    unpaired_ok = zero_modes == 1 && edges == 1;
  }
  line(unpaired_ok,
       "unpaired states: one zero mode (grade +), one truncation edge "
       "(grade -)");
  line(seconds_since(t0) < 1.0, "boson-fermion tower complete within 1s");
}

void criterion_abnormal_tower() {
  const PseudoSusySystem sys(build_boson_abnormal_phermion(-1.0, 8));

  const PairingReport rep = pair_spectrum(sys, 1e-10);
  bool negative_ok = !rep.spectrum.empty();
  for (const auto& l : rep.spectrum) {
    negative_ok = negative_ok && std::abs(l.value.imag()) <= 1e-8 &&
                  l.value.real() <= 1e-8;
  }
  line(negative_ok, "abnormal tower: every eigenvalue is real and <= 0");

  const SignTheoremVerdict verdict = sign_theorem_check(sys, 1e-10);
  line(all_pass(verdict.checks),
       "norm-transfer, eta-orthogonality, and sign checks all pass");

  bool signs_ok = verdict.pair_signs.size() == 8;
  for (const auto& s : verdict.pair_signs) {
    signs_ok = signs_ok && s.pass && s.sign_plus * s.sign_minus == s.sign_e;
  }
  line(signs_ok,
       "sign(<<psi+>>) sign(<<psi->>) == sign(E) for every degenerate pair");

  line(verdict.corollary_applicable && verdict.corollary_pass,
       "eta == tau forces all nonzero eigenvalues negative (corollary)");
  line(verdict.has_negative_real_eigenvalue && verdict.eta_indefinite &&
           verdict.theorem_pass,
       "negative spectrum certifies the indefinite metric via its inertia");
}

void criterion_multi_site() {
  bool all_ok = true;
  double ell5_seconds = 0.0;
  for (const int ell : {2, 3, 4, 5}) {
    const auto t0 = std::chrono::steady_clock::now();
    const MultiPhermionSystem sys = build_multi(ell);

    bool ok = sys.dim == (Index(1) << ell) &&
              physical_dimension(ell) == (Index(1) << (ell - 1));

    ok = ok && all_pass(verify_multi_relations(sys, 1e-12));

    bool diagonal_exact = true;
    for (Index x = 0; x < sys.dim; ++x) {
      const double want =
          std::popcount(static_cast<unsigned>(x)) % 2 == 0 ? 1.0 : -1.0;
      diagonal_exact = diagonal_exact && sys.eta_diagonal(x) == want;
    }
    ok = ok && diagonal_exact;

    const PhysCommutatorReport phys = verify_phys_commutators(sys, 1e-12);
    ok = ok && all_pass(phys.checks);
    for (const auto& t : phys.tuples) ok = ok && t.pass;

    const double dt = seconds_since(t0);
    if (ell == 5) ell5_seconds = dt;
    line(ok, "ell=" + std::to_string(ell) +
                 ": dims, site relations at 1e-12, exact signed diagonal, "
                 "pair commutators term-by-term");
    all_ok = all_ok && ok;
  }
  line(ell5_seconds < 10.0, "ell=5 sweep completes within 10s");
  (void)all_ok;
}

void criterion_lie_triples() {
  for (const int eps : {+1, -1}) {
    const JTriple t = build_j_triple(eps);
    const auto checks = verify_brackets(t, 1e-14);
    bool brackets_ok = checks.size() >= 3;
    for (int k = 0; k < 3; ++k) {
      brackets_ok = brackets_ok && checks[static_cast<std::size_t>(k)].pass;
    }
    line(brackets_ok, std::string("epsilon=") + (eps > 0 ? "+1" : "-1") +
                          ": 3/3 brackets hold at 1e-14 (" +
                          t.algebra_name() + ")");
    line(all_pass(checks), std::string("epsilon=") + (eps > 0 ? "+1" : "-1") +
                               ": pseudo-Hermiticity and ladder form of J3");
    const ComplexMatrix want =
        double(eps) * 0.75 * ComplexMatrix::Identity(2, 2);
    line(fro_norm(ComplexMatrix(casimir_witness(t) - want)) <= 1e-14,
         std::string("epsilon=") + (eps > 0 ? "+1" : "-1") +
             ": Casimir equals eps (3/4) 1");
  }
}

void criterion_property_sweeps() {
  Rng rng = make_rng();

  double worst_inv = 0.0, worst_prod = 0.0;
  for (int k = 0; k < 500; ++k) {
    const Index dim = 2 + static_cast<Index>(k % 5);
    const MetricOperator eta =
        MetricOperator::make(random_metric(dim, rng, k % 2 == 0));
    const ComplexMatrix a = random_matrix(dim, rng);
    const ComplexMatrix b = random_matrix(dim, rng);
    const ComplexMatrix a_sharp = pseudo_adjoint(a, eta);
    worst_inv = std::max(
        worst_inv, fro_norm(ComplexMatrix(pseudo_adjoint(a_sharp, eta) - a)) /
                       (residual_scale(a) * eta.condition()));
    worst_prod = std::max(
        worst_prod,
        fro_norm(ComplexMatrix(pseudo_adjoint(ComplexMatrix(a * b), eta) -
                               pseudo_adjoint(b, eta) *
                                   pseudo_adjoint(a, eta))) /
            (residual_scale(a, b) * eta.condition()));
  }
  line(worst_inv <= 1e-10,
       "500 random (eta, A): (A#)# == A within scaled 1e-10");
  line(worst_prod <= 1e-10,
       "500 random (eta, A, B): (AB)# == B# A# within scaled 1e-10");

  bool sylvester_ok = true;
  for (int k = 0; k < 100; ++k) {
    const Index dim = 2 + static_cast<Index>(k % 5);
    const ComplexMatrix h = random_metric(dim, rng, k % 3 == 0);
    const ComplexMatrix s = random_invertible(dim, rng);
    sylvester_ok = sylvester_ok &&
                   inertia_of(h) == inertia_of(ComplexMatrix(dagger(s) * h * s));
  }
  line(sylvester_ok, "100 random congruences preserve inertia");

  bool reassembly_ok = true;
  const CompositeSystem systems[] = {
      build_boson_fermion(1.0, 8),
      build_boson_phermion(1.0, 8, diag2(4, 1)),
      build_boson_abnormal_phermion(-1.0, 8),
  };
  for (const CompositeSystem& base : systems) {
    const PseudoSusySystem sys(base);
    const TwoComponentForm form = two_component(sys, 1e-10);
    reassembly_ok =
        reassembly_ok && all_pass(form.checks) &&
        fro_norm(ComplexMatrix(form.reassemble_Q() - sys.Q)) <=
            1e-11 * residual_scale(sys.Q) &&
        fro_norm(ComplexMatrix(form.reassemble_H() - sys.H)) <=
            1e-11 * residual_scale(sys.H) &&
        fro_norm(ComplexMatrix(form.reassemble_eta() - sys.eta.matrix())) <=
            1e-11 * residual_scale(sys.eta.matrix());
  }
  line(reassembly_ok,
       "two-component forms reassemble Q, H, eta within 1e-11 (all three "
       "oscillators)");

  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport everything = run_all(RunConfig{});
  const double dt = seconds_since(t0);
  line(everything.pass, "the aggregate suite passes end to end");
  line(dt < 60.0, "the aggregate suite completes within 60s");
}

}  // namespace

int main() {
  std::printf("== species relations ==\n");
  criterion_species_relations();
  std::printf("== metric classification and obstruction ==\n");
  criterion_metric_classification();
  std::printf("== boson-fermion tower ==\n");
  criterion_boson_fermion_tower();
  std::printf("== boson-abnormal-phermion tower ==\n");
  criterion_abnormal_tower();
  std::printf("== multi-site systems ==\n");
  criterion_multi_site();
  std::printf("== three-generator algebras ==\n");
  criterion_lie_triples();
  std::printf("== property sweeps and aggregate run ==\n");
  criterion_property_sweeps();

  std::printf("\n%s (%d failure%s)\n", failures == 0 ? "ALL PASS" : "FAILED",
              failures, failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}
