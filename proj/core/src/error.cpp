#include "regen/error.hpp"

namespace regen {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateIndex: return "DuplicateIndex";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::ParamsInvalid: return "ParamsInvalid";
    case ErrorCode::DuplicatePosition: return "DuplicatePosition";
    case ErrorCode::InsufficientSymbols: return "InsufficientSymbols";
    case ErrorCode::DecodeMismatch: return "DecodeMismatch";
    case ErrorCode::WrongMessageLength: return "WrongMessageLength";
    case ErrorCode::MissingHelper: return "MissingHelper";
    case ErrorCode::WrongHelperCount: return "WrongHelperCount";
    case ErrorCode::DuplicateHelper: return "DuplicateHelper";
    case ErrorCode::WrongFragmentCount: return "WrongFragmentCount";
    case ErrorCode::OrderingInfeasible: return "OrderingInfeasible";
    case ErrorCode::SchemeBackendMismatch: return "SchemeBackendMismatch";
    case ErrorCode::SingularStageMatrix: return "SingularStageMatrix";
    case ErrorCode::PlanPayloadMismatch: return "PlanPayloadMismatch";
    case ErrorCode::ScriptInvalid: return "ScriptInvalid";
    case ErrorCode::ReconstructMismatch: return "ReconstructMismatch";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::TrendViolated: return "TrendViolated";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace regen
