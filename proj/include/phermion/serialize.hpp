#pragma once

#include <json.hpp>

#include <vector>

#include "phermion/algebra.hpp"
#include "phermion/liealg.hpp"
#include "phermion/multiphermion.hpp"
#include "phermion/oscillator.hpp"
#include "phermion/pseudosusy.hpp"

namespace phermion {

// Insertion-ordered documents keep reports byte-stable across runs.
using Json = nlohmann::ordered_json;

Json json_of(const Complex& z);               // [re, im]
Json json_of(const ComplexMatrix& m);         // rows of [re, im] entries
Json json_of(const RelationResidual& r);
Json json_of(const std::vector<RelationResidual>& checks);
Json json_of(const Inertia& inertia);
Json json_of(const MetricOperator& eta);
Json json_of(const LadderRep& rep);
Json json_of(const MetricClassification& classification);
Json json_of(const CompositeSystem& sys);     // factors, E, truncation, checks
Json json_of(const TwoComponentForm& form);
Json json_of(const PairingReport& report);
Json json_of(const SignTheoremVerdict& verdict);
Json json_of(const MultiPhermionSystem& sys);
Json json_of(const PhysCommutatorReport& report);
Json json_of(const JTriple& triple);

// Reads a Hermitian invertible matrix written as rows of [re, im] entries.
ComplexMatrix matrix_from_json(const Json& doc);

}  // namespace phermion
