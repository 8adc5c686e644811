#pragma once

#include <stdexcept>
#include <string>

namespace pell {

enum class Errc {
    PerfectSquare,
    StepBudgetExceeded,
    IndexBeyondExpansion,
    UltimateFormReached,
    Unclassifiable,
    ConditionViolated,
    NotRepresentable,
    SquareTarget,
    NonPositiveFactor,
    ParityViolation,
    UnknownFamily,
    MixedRadicand,
    IncompleteInterval,
    MismatchDetected,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace pell
