#pragma once

#include <stdexcept>
#include <string>

namespace prab {

enum class ErrorKind {
  InvalidParameters,
  NonConvergence,
  DivergentParameters,
  UnfoldablePole,
  DomainError,
  QuadratureFailure,
  MissingDerivative,
  PathMismatch,
  SingularSystem,
  GridMismatch,
  NodeFailure,
  IoError,
  InvalidConfig,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace prab
