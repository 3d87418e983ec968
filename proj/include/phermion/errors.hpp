#pragma once

#include <stdexcept>
#include <string>

namespace phermion {

// Error taxonomy.  Config errors are caller mistakes (bad flags, bad sizes),
// domain errors are mathematically inadmissible inputs (a non-Hermitian
// metric where one is required), numeric errors are solver failures,
// structure errors are violated structural assumptions (block leakage),
// and AlgebraObstruction marks a demand that is provably unsatisfiable.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class SizeError : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class NumericError : public Error {
public:
  using Error::Error;
};

class StructureError : public Error {
public:
  using Error::Error;
};

// Carries the smallest singular value that triggered the failure.
class SingularityError : public Error {
public:
  SingularityError(const std::string& what, double smallest_sv)
      : Error(what), smallest_singular_value(smallest_sv) {}
  double smallest_singular_value;
};

// An algebraic demand that no representation can satisfy.  `residual` is the
// unavoidable gap; `demonstration` names the operation that exhibits it.
class AlgebraObstruction : public Error {
public:
  AlgebraObstruction(const std::string& what, double residual_,
                     std::string demonstration_ = "obstruction_demo")
      : Error(what), residual(residual_), demonstration(std::move(demonstration_)) {}
  double residual;
  std::string demonstration;
};

}  // namespace phermion
