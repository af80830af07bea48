#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regen {

enum class ErrorCode {
  NonPrimeModulus,
  UnsupportedDegree,
  DivisionByZero,
  FieldMismatch,
  FieldTooSmall,
  WrongField,
  NotPowerOfTwo,
  DimensionMismatch,
  SingularMatrix,
  DuplicatePoints,
  IndexOutOfRange,
  DuplicateIndex,
  NotSkewSymmetric,
  ParamsInvalid,
  DuplicatePosition,
  InsufficientSymbols,
  DecodeMismatch,
  WrongMessageLength,
  MissingHelper,
  WrongHelperCount,
  DuplicateHelper,
  WrongFragmentCount,
  OrderingInfeasible,
  SchemeBackendMismatch,
  SingularStageMatrix,
  PlanPayloadMismatch,
  ScriptInvalid,
  ReconstructMismatch,
  FormatError,
  IoError,
  TrendViolated,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can report it in machine-readable form.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace regen
