#pragma once

#include <cstdint>
#include <string>

#include "phermion/serialize.hpp"

namespace phermion {

inline constexpr const char* artifact_version = "0.1.0";
inline constexpr const char* report_schema = "phermion-lab/1";

// One bag of knobs shared by every suite; each command reads what it needs.
struct RunConfig {
  double tolerance = defaults::tolerance;
  int truncation = 8;
  double E = 0.0;  // 0 with e_explicit=false means "kind default"
  bool e_explicit = false;
  int ell = 4;
  std::string eta_spec;  // empty = species default; identity|sigma3|diag:...|file:...
  std::uint64_t seed = defaults::seed;
  std::string format = "table";  // table | json
  std::string species = "fermion";
  std::string kind = "boson-fermion";
  int epsilon = +1;
};

// Throws ConfigError on out-of-range knobs (tolerance, truncation, ell,
// format); command-specific fields are validated by their runner.
void validate(const RunConfig& cfg);

// identity | sigma3 | diag:a,b,... | file:<path to rows of [re,im] JSON>.
// The result is Hermitian and invertible or the call throws ConfigError.
ComplexMatrix parse_eta_spec(const std::string& spec, Index dim,
                             double tol = defaults::tolerance);

struct SuiteReport {
  Json document;      // {schema, artifactVersion, command, config, ..., pass}
  bool pass = false;  // mirrors document["pass"]
  std::string table;  // human-readable rendering of the same checks
};

SuiteReport run_verify_algebra(const RunConfig& cfg);
SuiteReport run_oscillator(const RunConfig& cfg);
SuiteReport run_multi(const RunConfig& cfg);
SuiteReport run_lie(const RunConfig& cfg);
SuiteReport run_all(const RunConfig& cfg);

}  // namespace phermion
