#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace avd {

enum class ErrorCode {
    OutOfRange,
    LoopEdge,
    Disconnected,
    LengthMismatch,
    BadIndex,
    BadVertex,
    IncompleteColoring,
    ColorOutOfPalette,
    TooSmall,
    ContradictoryConstraints,
    BudgetExceeded,
    NotBipartite,
    BadPaletteSize,
    PaletteTooSmall,
    Unrealizable,
    HypothesisViolated,
    BaseColoringInvalid,
    NoDisjointPair,
    NotFound,
    NoApplicableTheorem,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. The code identifies the contract
/// that was broken; the message carries the detail (for HypothesisViolated
/// it always names the failing hypothesis).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), detail_(message) {}

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace avd
