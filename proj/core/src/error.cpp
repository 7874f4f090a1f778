#include "bifurcato/error.hpp"

namespace bifurcato {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::DenominatorNonpositive: return "DenominatorNonpositive";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::ComplexRoots: return "ComplexRoots";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::EtaNotZero: return "EtaNotZero";
    case ErrorKind::ZetaEtaZero: return "ZetaEtaZero";
    case ErrorKind::DegenerateUnfolding: return "DegenerateUnfolding";
    case ErrorKind::H2Zero: return "H2Zero";
    case ErrorKind::EquilibriumLost: return "EquilibriumLost";
    case ErrorKind::NoPositiveEquilibria: return "NoPositiveEquilibria";
    case ErrorKind::NoRootInBracket: return "NoRootInBracket";
    case ErrorKind::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::NoReturn: return "NoReturn";
    case ErrorKind::ConvergedToEquilibrium: return "ConvergedToEquilibrium";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

}  // namespace bifurcato
