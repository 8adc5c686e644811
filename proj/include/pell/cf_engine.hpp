#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pell/bigint.hpp"
#include "pell/params.hpp"
#include "pell/solution.hpp"

namespace pell {

using Radicand = std::uint64_t;

// Step i of the expansion of sqrt(A): (sqrt(A) + shift) / remainder, reached with quotient d_{i-1}.
// Step 0 is the implicit start (shift 0, remainder 1).
struct CFStep {
    std::uint64_t index = 0;
    std::uint64_t quotient = 0;
    std::uint64_t shift = 0;
    std::uint64_t remainder = 1;

    bool operator==(const CFStep& o) const {
        return index == o.index && quotient == o.quotient && shift == o.shift && remainder == o.remainder;
    }
};

// Largest radicand the machine-word recurrence accepts.
inline constexpr Radicand kMaxRadicand = (Radicand{1} << 62);

CFStep expand_step(Radicand A, const std::optional<CFStep>& prev);

class CFExpansion {
public:
    Radicand radicand() const { return A_; }
    std::uint64_t d0() const { return d0_; }
    const std::vector<CFStep>& steps() const { return steps_; }
    bool complete() const { return period_ != 0; }
    std::uint64_t period_length() const;      // InvalidArgument on a partial expansion

    // d_n. Periodic past the stored steps for a complete expansion; IndexBeyondExpansion otherwise.
    std::uint64_t quotient(std::uint64_t n) const;
    std::vector<std::uint64_t> period_quotients() const;   // d_1 .. d_L

private:
    friend CFExpansion expand_sqrt(Radicand, std::optional<std::uint64_t>);
    friend CFExpansion expand_prefix(Radicand, std::uint64_t);
    Radicand A_ = 0;
    std::uint64_t d0_ = 0;
    std::uint64_t period_ = 0;
    std::vector<CFStep> steps_;   // steps 1..L+1 when complete
};

std::uint64_t default_step_budget(Radicand A);   // 10 sqrt(A) + 100

// Full period; closure is detected when (shift, remainder) repeats step 1.
CFExpansion expand_sqrt(Radicand A, std::optional<std::uint64_t> max_steps = std::nullopt);
// First `count` steps only (stops early if the period closes first).
CFExpansion expand_prefix(Radicand A, std::uint64_t count);

// B_n with B_{-2} = 1, B_{-1} = 0; numerators use y_{-2} = 0, y_{-1} = 1. n >= -2.
BigInt convergent(const CFExpansion& e, std::int64_t n);
BigInt numerator(const CFExpansion& e, std::int64_t n);

enum class ShortcutKind {
    EQUAL_R,
    DOUBLE_R_FWD,
    DOUBLE_R_BWD,
    SUM_EQ_2A,
    K_TIMES_R,
    R_EQ_2A,
    TRIPLE_R_FWD,
    TRIPLE_R_BWD,
};

const char* shortcut_name(ShortcutKind k);

struct ShortcutHit {
    ShortcutKind kind;
    std::uint64_t position;                                  // step index j
    std::variant<DistinctiveParams, Minus3Params> extracted;  // condition verified on construction
    PellSolution solution;                                   // identity verified
};

// Patterns at the last step of an expansion in progress (needs two steps). rhs is 1 or -3.
std::optional<ShortcutHit> scan_shortcuts(const CFExpansion& prefix, int rhs);

// Incremental expansion that tests the patterns at each new step.
// With the window enabled (rhs = 1 only) scanning stops at the centre of the period:
// an even period is detected when the shift repeats, an odd one when the remainder repeats.
class ShortcutScanner {
public:
    ShortcutScanner(Radicand A, int rhs, bool windowed = true);

    std::optional<ShortcutHit> advance();

    std::uint64_t steps() const { return j_; }
    bool period_closed() const { return closed_; }
    bool scanning() const { return scanning_; }
    std::uint64_t shift() const { return P_; }
    std::uint64_t remainder() const { return Q_; }
    const BigInt& B_last() const { return B1_; }    // B_{j-1}
    const BigInt& y_last() const { return y1_; }    // y_{j-1}, kept for rhs = -3 only

private:
    Radicand A_;
    std::uint64_t d0_;
    int rhs_;
    bool windowed_;
    std::uint64_t j_ = 0;
    std::uint64_t P_ = 0, Q_ = 1;
    std::uint64_t firstP_ = 0, firstQ_ = 0;
    bool closed_ = false;
    bool scanning_ = true;
    BigInt B1_ = 0, B2_ = 1;
    BigInt y1_ = 1, y2_ = 0;
};

struct SolveResult {
    PellSolution solution;
    std::string method;
    std::uint64_t steps = 0;
    std::optional<ShortcutHit> hit;
};

// x = B_{L-1} for even L, B_{2L-1} for odd L. Steps counted: L + 1.
PellSolution solve_standard(Radicand A);
SolveResult solve_standard_traced(Radicand A);

// Shortcut path with fallback tagged STANDARD_FALLBACK.
SolveResult solve_fast(Radicand A);

}  // namespace pell
