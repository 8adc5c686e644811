#include "pell/errors.hpp"

namespace pell {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::PerfectSquare: return "PerfectSquare";
        case Errc::StepBudgetExceeded: return "StepBudgetExceeded";
        case Errc::IndexBeyondExpansion: return "IndexBeyondExpansion";
        case Errc::UltimateFormReached: return "UltimateFormReached";
        case Errc::Unclassifiable: return "Unclassifiable";
        case Errc::ConditionViolated: return "ConditionViolated";
        case Errc::NotRepresentable: return "NotRepresentable";
        case Errc::SquareTarget: return "SquareTarget";
        case Errc::NonPositiveFactor: return "NonPositiveFactor";
        case Errc::ParityViolation: return "ParityViolation";
        case Errc::UnknownFamily: return "UnknownFamily";
        case Errc::MixedRadicand: return "MixedRadicand";
        case Errc::IncompleteInterval: return "IncompleteInterval";
        case Errc::MismatchDetected: return "MismatchDetected";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace pell
