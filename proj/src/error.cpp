#include "prab/error.hpp"

namespace prab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::DivergentParameters: return "DivergentParameters";
    case ErrorKind::UnfoldablePole: return "UnfoldablePole";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::MissingDerivative: return "MissingDerivative";
    case ErrorKind::PathMismatch: return "PathMismatch";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NodeFailure: return "NodeFailure";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace prab
