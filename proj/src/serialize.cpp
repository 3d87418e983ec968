#include "phermion/serialize.hpp"

namespace phermion {

Json json_of(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json json_of(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(json_of(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of(const RelationResidual& r) {
  return Json{{"name", r.relation_name},
              {"residual", r.residual_norm},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

Json json_of(const std::vector<RelationResidual>& checks) {
  Json arr = Json::array();
  for (const RelationResidual& r : checks) arr.push_back(json_of(r));
  return arr;
}

Json json_of(const Inertia& inertia) {
  return Json{{"nPlus", inertia.n_plus},
              {"nMinus", inertia.n_minus},
              {"nZero", inertia.n_zero}};
}

Json json_of(const MetricOperator& eta) {
  return Json{{"matrix", json_of(eta.matrix())},
              {"inertia", json_of(eta.inertia())},
              {"condition", eta.condition()}};
}

Json json_of(const LadderRep& rep) {
  Json doc{{"species", to_string(rep.species)},
           {"dim", rep.dim()},
           {"c", json_of(rep.c)},
           {"eta", json_of(rep.eta.matrix())},
           {"epsilon", rep.epsilon}};
  doc["truncation"] = rep.truncation ? Json(*rep.truncation) : Json(nullptr);
  doc["metricNegated"] = rep.metric_negated;
  return doc;
}

Json json_of(const MetricClassification& classification) {
  Json basis = Json::array();
  for (const MetricSolution& sol : classification.basis) {
    basis.push_back(
        Json{{"eta", json_of(sol.eta)}, {"inertia", json_of(sol.inertia)}});
  }
  Json doc{{"solutionDimension", classification.basis.size()},
           {"basis", std::move(basis)}};
  if (classification.generic) {
    doc["generic"] = Json{{"eta", json_of(classification.generic->eta)},
                          {"inertia", json_of(classification.generic->inertia)}};
  } else {
    doc["generic"] = nullptr;
  }
  doc["anyDefiniteBasisElement"] = classification.any_definite_basis_element();
  return doc;
}

Json json_of(const CompositeSystem& sys) {
  Json factors = Json::array();
  for (const LadderRep& rep : sys.factors) factors.push_back(json_of(rep));
  return Json{{"factors", std::move(factors)},
              {"dim", sys.dim},
              {"E", sys.E},
              {"truncation", sys.truncation},
              {"etaInertia", json_of(sys.eta.inertia())}};
}

Json json_of(const TwoComponentForm& form) {
  return Json{{"direction", to_string(form.direction)},
              {"dimPlus", form.dim_plus},
              {"dimMinus", form.dim_minus},
              {"D", json_of(form.D)},
              {"DSharp", json_of(form.D_sharp)},
              {"etaPlusInertia", json_of(form.eta_plus.inertia())},
              {"etaMinusInertia", json_of(form.eta_minus.inertia())},
              {"checks", json_of(form.checks)}};
}

namespace {

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

Json json_of(const PairingReport& report) {
  Json spectrum = Json::array();
  for (const SpectralLine& line : report.spectrum) {
    spectrum.push_back(Json{{"value", json_of(line.value)},
                            {"multiplicity", line.multiplicity},
                            {"grades", line.grades}});
  }
  Json pairs = Json::array();
  for (const PairEntry& p : report.pairs) {
    pairs.push_back(Json{{"eigenvalue", p.eigenvalue},
                         {"etaNormPlus", p.eta_norm_plus},
                         {"etaNormMinus", p.eta_norm_minus},
                         {"signPlus", sign_of(p.eta_norm_plus)},
                         {"signMinus", sign_of(p.eta_norm_minus)},
                         {"producedBy", p.produced_by},
                         {"sourceGrade", p.source_grade},
                         {"edge", p.edge},
                         {"partnerResidual", p.partner_residual}});
  }
  Json unpaired = Json::array();
  for (const UnpairedEntry& u : report.unpaired) {
    unpaired.push_back(Json{{"value", json_of(u.value)},
                            {"grade", u.grade},
                            {"reason", u.reason}});
  }
  Json complex_pairs = Json::array();
  for (const auto& [a, b] : report.complex_pairs) {
    complex_pairs.push_back(Json::array({json_of(a), json_of(b)}));
  }
  return Json{{"spectrum", std::move(spectrum)},
              {"pairs", std::move(pairs)},
              {"unpaired", std::move(unpaired)},
              {"complexPairs", std::move(complex_pairs)},
              {"checks", json_of(report.checks)}};
}

Json json_of(const SignTheoremVerdict& verdict) {
  Json signs = Json::array();
  for (const PairSigns& s : verdict.pair_signs) {
    signs.push_back(Json{{"eigenvalue", s.eigenvalue},
                         {"signPlus", s.sign_plus},
                         {"signMinus", s.sign_minus},
                         {"signE", s.sign_e},
                         {"pass", s.pass}});
  }
  return Json{{"pairSigns", std::move(signs)},
              {"hasNegativeRealEigenvalue", verdict.has_negative_real_eigenvalue},
              {"etaIndefinite", verdict.eta_indefinite},
              {"theoremPass", verdict.theorem_pass},
              {"corollaryApplicable", verdict.corollary_applicable},
              {"corollaryPass", verdict.corollary_pass},
              {"maxCrossGroupOverlap", verdict.max_cross_group_overlap},
              {"checks", json_of(verdict.checks)}};
}

Json json_of(const MultiPhermionSystem& sys) {
  Json diagonal = Json::array();
  for (Index x = 0; x < sys.dim; ++x) {
    diagonal.push_back(static_cast<int>(sys.eta_diagonal(x)));
  }
  return Json{{"ell", sys.ell},
              {"dim", sys.dim},
              {"physicalDim", physical_dimension(sys.ell)},
              {"innerProductDiagonal", std::move(diagonal)}};
}

Json json_of(const PhysCommutatorReport& report) {
  Json tuples = Json::array();
  for (const PairCommutatorCheck& t : report.tuples) {
    tuples.push_back(
        Json{{"tuple", Json::array({t.i, t.j, t.k, t.l})},
             {"residual", t.residual},
             {"pass", t.pass},
             {"termBreakdown", Json{{"identity", t.identity_coeff},
                                    {"beta_ki", t.beta_ki_coeff},
                                    {"beta_li", t.beta_li_coeff},
                                    {"beta_kj", t.beta_kj_coeff},
                                    {"beta_lj", t.beta_lj_coeff}}}});
  }
  return Json{{"commutatorChecks", std::move(tuples)},
              {"checks", json_of(report.checks)}};
}

Json json_of(const JTriple& triple) {
  return Json{{"epsilon", triple.epsilon},
              {"deltaVector", triple.delta},
              {"algebra", triple.algebra_name()},
              {"J1", json_of(triple.J1)},
              {"J2", json_of(triple.J2)},
              {"J3", json_of(triple.J3)},
              {"casimir", json_of(casimir_witness(triple))}};
}

ComplexMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_array() || doc.empty()) {
    throw ConfigError("matrix JSON must be a non-empty array of rows");
  }
  const Index rows = static_cast<Index>(doc.size());
  const Index cols = static_cast<Index>(doc.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = doc.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ConfigError("matrix JSON rows must have equal length");
    }
    for (Index c = 0; c < cols; ++c) {
      const Json& entry = row.at(static_cast<std::size_t>(c));
      if (!entry.is_array() || entry.size() != 2 ||
          !entry.at(0).is_number() || !entry.at(1).is_number()) {
        throw ConfigError("matrix entries must be [re, im] number pairs");
      }
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace phermion
