#pragma once

#include <stdexcept>
#include <string>

namespace witkit {

enum class ErrorKind {
  DimensionMismatch,
  NotHermitian,
  ConvergenceFailure,
  NonRealResult,
  WeightSumError,
  NotADensity,
  NotAWitness,
  ExceedsCmax,
  NotNegative,
  EstimateMissing,
  DifferentSigma,
  ZeroTrace,
  InvalidParams,
  InvalidGrid,
  ParseError,
  IoError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` is stable and is what the CLI
/// maps to exit codes; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace witkit
