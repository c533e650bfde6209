#pragma once

#include <stdexcept>
#include <string>

namespace pezzo {

enum class ErrorKind {
  NotInvertible,
  NonIntegral,
  NonIntegralExponent,
  NotGorensteinSymmetric,
  OrderMismatch,
  NotCoprime,
  InvalidWeights,
  NotQuasilinear,
  WrongDimension,
  NonFano,
  NonPositiveDegree,
  NotIsolated,
  DegreeMismatch,
  ResourceBudget,
  SchemaError,
  ValidationError,
  InadmissibleParameter,
  ParseError,
  UnknownEntry,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace pezzo
