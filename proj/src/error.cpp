#include "avd/error.hpp"

namespace avd {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::BadVertex: return "BadVertex";
        case ErrorCode::IncompleteColoring: return "IncompleteColoring";
        case ErrorCode::ColorOutOfPalette: return "ColorOutOfPalette";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::ContradictoryConstraints: return "ContradictoryConstraints";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::BadPaletteSize: return "BadPaletteSize";
        case ErrorCode::PaletteTooSmall: return "PaletteTooSmall";
        case ErrorCode::Unrealizable: return "Unrealizable";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::BaseColoringInvalid: return "BaseColoringInvalid";
        case ErrorCode::NoDisjointPair: return "NoDisjointPair";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::NoApplicableTheorem: return "NoApplicableTheorem";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace avd
