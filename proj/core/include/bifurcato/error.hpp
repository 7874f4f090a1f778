#pragma once

#include <stdexcept>
#include <string>

namespace bifurcato {

enum class ErrorKind {
  ConstraintViolation,
  DenominatorNonpositive,
  NotARoot,
  ConditionFailed,
  ComplexRoots,
  DegenerateDenominator,
  EtaNotZero,
  ZetaEtaZero,
  DegenerateUnfolding,
  H2Zero,
  EquilibriumLost,
  NoPositiveEquilibria,
  NoRootInBracket,
  StepSizeUnderflow,
  NonFiniteState,
  NoReturn,
  ConvergedToEquilibrium,
  IoError,
};

const char* error_name(ErrorKind kind);

// Domain error raised by the library. The kind names the failure mode so that
// callers (and the CLI) can report it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace bifurcato
