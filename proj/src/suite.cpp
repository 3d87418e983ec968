#include "phermion/suite.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "phermion/errors.hpp"
#include "phermion/liealg.hpp"
#include "phermion/multiphermion.hpp"
#include "phermion/oscillator.hpp"
#include "phermion/pseudosusy.hpp"
#include "phermion/rng.hpp"

namespace phermion {

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

std::string num(double v) {
  std::ostringstream os;
  os << std::showpos << std::fixed << std::setprecision(6) << v;
  return os.str();
}

std::string num(Complex v) {
  if (std::abs(v.imag()) < 1e-14) return num(v.real());
  return num(v.real()) + " " + num(v.imag()) + "i";
}

void render_checks(std::ostringstream& os,
                   const std::vector<RelationResidual>& checks) {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.relation_name.size());
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << std::left
       << std::setw(static_cast<int>(width)) << c.relation_name << std::right
       << "  residual " << sci(c.residual_norm) << "  tol " << sci(c.tolerance)
       << "\n";
  }
}

void render_summary(std::ostringstream& os,
                    const std::vector<RelationResidual>& checks) {
  std::size_t ok = 0;
  for (const auto& c : checks) ok += c.pass ? 1 : 0;
  os << "overall: " << (ok == checks.size() ? "PASS" : "FAIL") << " (" << ok
     << "/" << checks.size() << " checks)\n";
}

Json config_echo(const RunConfig& cfg) {
  Json j;
  j["tolerance"] = cfg.tolerance;
  j["truncation"] = cfg.truncation;
  j["E"] = cfg.E;
  j["ell"] = cfg.ell;
  j["etaSpec"] = cfg.eta_spec;
  j["seed"] = cfg.seed;
  j["format"] = cfg.format;
  j["species"] = cfg.species;
  j["kind"] = cfg.kind;
  j["epsilon"] = cfg.epsilon;
  return j;
}

Json wrap_document(const std::string& command, const RunConfig& cfg,
                   Json report, bool pass) {
  Json doc;
  doc["schema"] = report_schema;
  doc["artifactVersion"] = artifact_version;
  doc["command"] = command;
  doc["config"] = config_echo(cfg);
  doc["report"] = std::move(report);
  doc["pass"] = pass;
  return doc;
}

// Distance from b to the complex line spanned by t, both in Frobenius sense.
double span_alignment_residual(const ComplexMatrix& b, const ComplexMatrix& t) {
  const Complex coeff = (t.adjoint() * b).trace() / (t.adjoint() * t).trace();
  return fro_norm(b - coeff * t);
}

std::vector<double> parse_double_list(const std::string& body) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string item = body.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse '" + item + "' as a diagonal entry");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Species and kinds whose metric is part of the definition only accept an
// explicit --eta that reproduces the fixed metric.
void require_fixed_metric(const RunConfig& cfg, const ComplexMatrix& fixed,
                          const std::string& fixed_name,
                          const std::string& what) {
  if (cfg.eta_spec.empty()) return;
  const ComplexMatrix requested =
      parse_eta_spec(cfg.eta_spec, fixed.rows(), cfg.tolerance);
  if (!approx_equal(requested, fixed, cfg.tolerance)) {
    throw ConfigError(what + " fixes the metric to " + fixed_name +
                      "; a general metric needs the phermion species");
  }
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (cfg.truncation < 2) throw ConfigError("truncation must be at least 2");
  if (cfg.ell < 2 || cfg.ell > 12) {
    throw ConfigError("site count must lie in 2..12, got " +
                      std::to_string(cfg.ell));
  }
  if (cfg.format != "table" && cfg.format != "json") {
    throw ConfigError("format must be 'table' or 'json', got '" + cfg.format +
                      "'");
  }
}

ComplexMatrix parse_eta_spec(const std::string& spec, Index dim, double tol) {
  if (spec.empty() || spec == "identity") {
    return ComplexMatrix::Identity(dim, dim);
  }
  if (spec == "sigma3") {
    if (dim != 2) {
      throw ConfigError("eta spec 'sigma3' is 2x2 but a " +
                        std::to_string(dim) + "-dim metric is required");
    }
    return sigma3();
  }
  if (spec.rfind("diag:", 0) == 0) {
    const std::vector<double> entries = parse_double_list(spec.substr(5));
    if (static_cast<Index>(entries.size()) != dim) {
      throw ConfigError("diagonal metric has " +
                        std::to_string(entries.size()) + " entries, need " +
                        std::to_string(dim));
    }
    ComplexMatrix eta = ComplexMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) {
      if (std::abs(entries[static_cast<std::size_t>(k)]) <= tol) {
        throw ConfigError("diagonal metric entries must be nonzero");
      }
      eta(k, k) = entries[static_cast<std::size_t>(k)];
    }
    return eta;
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open metric file '" + path + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const std::exception& e) {
      throw ConfigError("metric file '" + path +
                        "' is not valid JSON: " + e.what());
    }
    const ComplexMatrix eta = matrix_from_json(doc);
    if (eta.rows() != dim) {
      throw ConfigError("metric file '" + path + "' holds a " +
                        std::to_string(eta.rows()) + "x" +
                        std::to_string(eta.cols()) + " matrix, need " +
                        std::to_string(dim) + "x" + std::to_string(dim));
    }
    try {
      MetricOperator::make(eta, tol);
    } catch (const Error& e) {
      throw ConfigError("metric file '" + path + "': " + e.what());
    }
    return eta;
  }
  throw ConfigError("unknown eta spec '" + spec +
                    "' (expected identity, sigma3, diag:<list>, file:<path>)");
}

SuiteReport run_verify_algebra(const RunConfig& cfg_in) {
  RunConfig cfg = cfg_in;
  validate(cfg);
  const std::optional<Species> species = species_from_string(cfg.species);
  if (!species) {
    throw ConfigError(
        "unknown species '" + cfg.species +
        "' (expected fermion, phermion, abnormal-phermion, boson)");
  }

  const LadderRep rep = [&]() -> LadderRep {
    switch (*species) {
      case Species::fermion:
        require_fixed_metric(cfg, ComplexMatrix::Identity(2, 2), "identity",
                             "the fermion species");
        cfg.eta_spec = "identity";
        return make_fermion();
      case Species::phermion: {
        if (cfg.eta_spec.empty()) cfg.eta_spec = "identity";
        return make_phermion(parse_eta_spec(cfg.eta_spec, 2, cfg.tolerance),
                             cfg.tolerance);
      }
      case Species::abnormal_phermion:
        require_fixed_metric(cfg, sigma3(), "sigma3",
                             "the abnormal-phermion species");
        cfg.eta_spec = "sigma3";
        return make_abnormal_phermion();
      case Species::boson:
        require_fixed_metric(
            cfg, ComplexMatrix::Identity(cfg.truncation + 1, cfg.truncation + 1),
            "identity", "the truncated boson");
        cfg.eta_spec = "identity";
        return make_boson(cfg.truncation);
    }
    throw ConfigError("unknown species '" + cfg.species + "'");
  }();

  std::vector<RelationResidual> checks = verify_species(rep, cfg.tolerance);

  Json report;
  report["rep"] = json_of(rep);

  if (*species != Species::boson) {
    const ComplexMatrix alpha = two_level_annihilator();
    const Complex iu(0.0, 1.0);
    const bool abnormal = *species == Species::abnormal_phermion;
    const ComplexMatrix c0 = abnormal ? ComplexMatrix(iu * alpha) : alpha;
    const ComplexMatrix c0_star =
        abnormal ? ComplexMatrix(iu * dagger(alpha)) : dagger(alpha);
    const MetricClassification cls =
        classify_metrics(c0, c0_star, cfg.tolerance, cfg.seed);
    report["metricClassification"] = json_of(cls);

    checks.push_back(check_value(
        "metric solution space is one-dimensional",
        std::abs(static_cast<double>(cls.basis.size()) - 1.0), 0.5, 1.0));
    if (!cls.basis.empty()) {
      const ComplexMatrix target =
          abnormal ? sigma3() : ComplexMatrix(ComplexMatrix::Identity(2, 2));
      checks.push_back(check_value(
          abnormal ? "metric solutions span sigma3"
                   : "metric solutions span the identity",
          span_alignment_residual(cls.basis.front().eta, target),
          cfg.tolerance, 1.0));
      if (abnormal) {
        checks.push_back(check_value(
            "spanning metric has inertia (1, 1, 0)",
            cls.basis.front().inertia == Inertia{1, 1, 0} ? 0.0 : 1.0, 0.5,
            1.0));
        checks.push_back(check_value(
            "no metric in the solution span is definite",
            cls.any_definite_basis_element() ? 1.0 : 0.0, 0.5, 1.0));
      } else {
        checks.push_back(check_value(
            "solution span contains a definite metric",
            cls.any_definite_basis_element() ? 0.0 : 1.0, 0.5, 1.0));
      }
    }
  }

  if (*species == Species::phermion) {
    Rng rng = make_rng(cfg.seed);
    const int draws = 100;
    double worst = 0.0;
    for (int k = 0; k < draws; ++k) {
      const Complex u = random_complex(rng, -2.0, 2.0);
      const Complex v = random_complex(rng, -2.0, 2.0);
      const ComplexMatrix got = obstruction_demo(u, v, cfg.tolerance);
      const ComplexMatrix want = obstruction_expected(u, v);
      worst = std::max(worst, fro_norm(got - want) / residual_scale(got));
    }
    checks.push_back(check_value(
        "{sigma, sigma3 sigma^dag sigma3} == -(|u| - |v|)^2 1 (100 seeded "
        "draws)",
        worst, cfg.tolerance, 1.0));
    report["obstructionDraws"] = draws;
  }

  report["checks"] = json_of(checks);
  const bool pass = all_pass(checks);

  std::ostringstream os;
  os << "verify-algebra: species=" << cfg.species << " dim=" << rep.dim()
     << " epsilon=" << (rep.epsilon > 0 ? "+1" : "-1")
     << " eta=" << cfg.eta_spec << "\n";
  render_checks(os, checks);
  render_summary(os, checks);
  return SuiteReport{wrap_document("verify-algebra", cfg, report, pass), pass,
                     os.str()};
}

SuiteReport run_oscillator(const RunConfig& cfg_in) {
  RunConfig cfg = cfg_in;
  validate(cfg);

  const CompositeSystem sys = [&]() -> CompositeSystem {
    if (cfg.kind == "boson-fermion") {
      if (!cfg.e_explicit) cfg.E = 1.0;
      require_fixed_metric(cfg, ComplexMatrix::Identity(2, 2), "identity",
                           "the boson-fermion oscillator");
      cfg.eta_spec = "identity";
      return build_boson_fermion(cfg.E, cfg.truncation);
    }
    if (cfg.kind == "boson-phermion") {
      if (!cfg.e_explicit) cfg.E = 1.0;
      if (cfg.eta_spec.empty()) cfg.eta_spec = "identity";
      return build_boson_phermion(cfg.E, cfg.truncation,
                                  parse_eta_spec(cfg.eta_spec, 2, cfg.tolerance),
                                  cfg.tolerance);
    }
    if (cfg.kind == "boson-abnormal-phermion") {
      if (!cfg.e_explicit) cfg.E = -1.0;
      require_fixed_metric(cfg, sigma3(), "sigma3",
                           "the boson-abnormal-phermion oscillator");
      cfg.eta_spec = "sigma3";
      return build_boson_abnormal_phermion(cfg.E, cfg.truncation);
    }
    throw ConfigError("unknown kind '" + cfg.kind +
                      "' (expected boson-fermion, boson-phermion, "
                      "boson-abnormal-phermion)");
  }();
  cfg.e_explicit = true;

  const PseudoSusySystem ps(sys);
  const std::vector<RelationResidual> algebra_checks =
      verify_algebra(ps, cfg.tolerance);
  std::vector<RelationResidual> combined = algebra_checks;

  std::optional<TwoComponentForm> form;
  try {
    form = two_component(ps, cfg.tolerance);
  } catch (const Error& e) {
    combined.push_back(RelationResidual{
        std::string("two-component split: ") + e.what(), 1.0, 0.5, false});
  }
  if (form) {
    combined.insert(combined.end(), form->checks.begin(), form->checks.end());
  }

  const PairingReport pairing = pair_spectrum(ps, cfg.tolerance);
  const SignTheoremVerdict verdict = sign_theorem_check(ps, cfg.tolerance);
  combined.insert(combined.end(), pairing.checks.begin(),
                  pairing.checks.end());
  combined.insert(combined.end(), verdict.checks.begin(),
                  verdict.checks.end());

  Json pairing_json = json_of(pairing);
  Json system_json = json_of(sys);
  system_json["spectrum"] = pairing_json["spectrum"];
  system_json["checks"] = json_of(algebra_checks);

  Json report;
  report["system"] = std::move(system_json);
  if (form) report["twoComponent"] = json_of(*form);
  report["pairing"] = std::move(pairing_json);
  report["signTheorem"] = json_of(verdict);

  const bool pass = all_pass(combined);

  std::ostringstream os;
  os << "oscillator: kind=" << cfg.kind << " E=" << num(cfg.E)
     << " truncation=" << cfg.truncation << " dim=" << sys.dim
     << " eta=" << cfg.eta_spec << "\n";
  os << "  spectrum:\n";
  for (const auto& line : pairing.spectrum) {
    os << "    E " << num(line.value) << "  x" << line.multiplicity
       << "  grades {";
    for (std::size_t k = 0; k < line.grades.size(); ++k) {
      os << (k ? "," : "") << (line.grades[k] > 0 ? "+" : "-");
    }
    os << "}\n";
  }
  if (!pairing.pairs.empty()) {
    os << "  pairs:\n";
    for (const auto& p : pairing.pairs) {
      os << "    E " << num(p.eigenvalue) << "  eta-norm signs ("
         << (p.eta_norm_plus > 0 ? "+" : "-") << ", "
         << (p.eta_norm_minus > 0 ? "+" : "-") << ")  produced by "
         << p.produced_by << " from grade "
         << (p.source_grade > 0 ? "+" : "-")
         << (p.edge ? "  [leaves the protected subspace]" : "") << "\n";
    }
  }
  if (!pairing.unpaired.empty()) {
    os << "  unpaired:\n";
    for (const auto& u : pairing.unpaired) {
      os << "    E " << num(u.value) << "  grade " << (u.grade > 0 ? "+" : "-")
         << "  " << u.reason << "\n";
    }
  }
  os << "  sign theorem: eta "
     << (verdict.eta_indefinite ? "indefinite" : "definite")
     << ", negative real eigenvalue "
     << (verdict.has_negative_real_eigenvalue ? "present" : "absent")
     << ", corollary "
     << (verdict.corollary_applicable ? "applicable" : "not applicable")
     << "\n";
  render_checks(os, combined);
  render_summary(os, combined);
  return SuiteReport{wrap_document("oscillator", cfg, report, pass), pass,
                     os.str()};
}

SuiteReport run_multi(const RunConfig& cfg_in) {
  RunConfig cfg = cfg_in;
  validate(cfg);
  if (!cfg.eta_spec.empty()) {
    throw ConfigError(
        "the multi-site system builds its metric as sigma3^(x)ell; --eta does "
        "not apply");
  }

  const MultiPhermionSystem sys = build_multi(cfg.ell);
  const std::vector<RelationResidual> relations =
      verify_multi_relations(sys, cfg.tolerance);
  const PhysCommutatorReport phys = verify_phys_commutators(sys, cfg.tolerance);

  std::vector<RelationResidual> combined = relations;
  combined.insert(combined.end(), phys.checks.begin(), phys.checks.end());

  Json report = json_of(sys);
  Json phys_json = json_of(phys);
  report["relationChecks"] = json_of(relations);
  report["commutatorChecks"] = phys_json["commutatorChecks"];
  report["checks"] = phys_json["checks"];

  bool tuples_ok = true;
  double worst_tuple = 0.0;
  for (const auto& t : phys.tuples) {
    tuples_ok = tuples_ok && t.pass;
    worst_tuple = std::max(worst_tuple, t.residual);
  }
  const bool pass = all_pass(combined) && tuples_ok;

  std::ostringstream os;
  os << "multi: ell=" << cfg.ell << " dim=" << sys.dim
     << " physicalDim=" << physical_dimension(cfg.ell) << "\n";
  os << "  pair commutator sweep: " << phys.tuples.size() << " tuples, "
     << (tuples_ok ? "all match the closed form" : "MISMATCH") << ", max residual "
     << sci(worst_tuple) << "\n";
  if (cfg.ell <= 3) {
    os << "  inner-product diagonal:";
    for (Index k = 0; k < sys.eta_diagonal.size(); ++k) {
      os << " " << (sys.eta_diagonal(k) > 0 ? "+1" : "-1");
    }
    os << "\n";
  }
  render_checks(os, combined);
  render_summary(os, combined);
  return SuiteReport{wrap_document("multi", cfg, report, pass), pass,
                     os.str()};
}

SuiteReport run_lie(const RunConfig& cfg_in) {
  RunConfig cfg = cfg_in;
  validate(cfg);
  const JTriple triple = build_j_triple(cfg.epsilon);
  const std::vector<RelationResidual> checks =
      verify_brackets(triple, std::min(cfg.tolerance, 1e-14));

  Json report = json_of(triple);
  Json brackets = Json::array();
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (int r = 0; r < 3; ++r) {
    const int k = cyc[r][2];
    Json entry;
    entry["ij"] = Json::array({cyc[r][0], cyc[r][1]});
    entry["expectedK"] = k;
    entry["sign"] = triple.delta[static_cast<std::size_t>(k - 1)];
    entry["residual"] = checks[static_cast<std::size_t>(r)].residual_norm;
    entry["pass"] = checks[static_cast<std::size_t>(r)].pass;
    brackets.push_back(std::move(entry));
  }
  report["brackets"] = std::move(brackets);
  report["checks"] = json_of(checks);
  const bool pass = all_pass(checks);

  std::ostringstream os;
  os << "lie: epsilon=" << (cfg.epsilon > 0 ? "+1" : "-1")
     << " algebra=" << triple.algebra_name() << " delta=("
     << triple.delta[0] << "," << triple.delta[1] << "," << triple.delta[2]
     << ")\n";
  render_checks(os, checks);
  render_summary(os, checks);
  return SuiteReport{wrap_document("lie", cfg, report, pass), pass, os.str()};
}

SuiteReport run_all(const RunConfig& cfg_in) {
  RunConfig cfg = cfg_in;
  validate(cfg);

  std::vector<SuiteReport> subs;
  for (const char* sp :
       {"fermion", "phermion", "abnormal-phermion", "boson"}) {
    RunConfig c = cfg;
    c.species = sp;
    if (c.species != "phermion") c.eta_spec.clear();
    subs.push_back(run_verify_algebra(c));
  }
  for (const char* kind :
       {"boson-fermion", "boson-phermion", "boson-abnormal-phermion"}) {
    RunConfig c = cfg;
    c.kind = kind;
    c.E = 0.0;
    c.e_explicit = false;  // each oscillator keeps its own sign convention
    if (c.kind != "boson-phermion") c.eta_spec.clear();
    subs.push_back(run_oscillator(c));
  }
  {
    RunConfig c = cfg;
    c.eta_spec.clear();
    subs.push_back(run_multi(c));
  }
  for (const int eps : {+1, -1}) {
    RunConfig c = cfg;
    c.epsilon = eps;
    subs.push_back(run_lie(c));
  }

  bool pass = true;
  std::size_t ok = 0;
  Json suites = Json::array();
  std::ostringstream os;
  for (auto& sub : subs) {
    pass = pass && sub.pass;
    ok += sub.pass ? 1 : 0;
    Json body = std::move(sub.document);
    body.erase("schema");
    body.erase("artifactVersion");
    suites.push_back(std::move(body));
    os << sub.table << "\n";
  }

  Json doc;
  doc["schema"] = report_schema;
  doc["artifactVersion"] = artifact_version;
  doc["command"] = "all";
  doc["config"] = config_echo(cfg);
  doc["suites"] = std::move(suites);
  doc["pass"] = pass;
  os << "all suites: " << (pass ? "PASS" : "FAIL") << " (" << ok << "/"
     << subs.size() << " suites)\n";
  return SuiteReport{std::move(doc), pass, os.str()};
}

}  // namespace phermion
