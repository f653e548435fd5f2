#pragma once

#include <stdexcept>
#include <string>

namespace sumrank {

enum class ErrorCode {
    NotAPrimePower,
    IndexOutOfRange,
    InvalidParams,
    InvalidWeight,
    InvalidShape,
    DimensionMismatch,
    InfeasibleTarget,
    InfeasibleParams,
    InvalidPrefix,
    InvalidDims,
    TooLarge,
    IterationCapExceeded,
    WrongRegime,
    UnknownModel,
    KindMismatch,
    ParseError,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception type; the code
// lets callers branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace sumrank
