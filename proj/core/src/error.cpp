#include "sumrank/error.hpp"

namespace sumrank {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotAPrimePower: return "NotAPrimePower";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::InvalidPrefix: return "InvalidPrefix";
    case ErrorCode::InvalidDims: return "InvalidDims";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace sumrank
