#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pell/bigint.hpp"
#include "pell/cf_engine.hpp"
#include "pell/errors.hpp"
#include "pell/params.hpp"
#include "pell/solution.hpp"

namespace pell {

// b Y^2 - c X^2 + 2a XY with b c + a^2 = A.
struct BQForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    Radicand radicand = 0;

    std::int64_t r() const { return b - c + 2 * a; }   // value at X = Y = 1
    bool operator==(const BQForm& o) const { return a == o.a && b == o.b && c == o.c && radicand == o.radicand; }
};

// Fills radicand from b c + a^2; throws InvalidArgument when that is not positive.
BQForm make_form(std::int64_t a, std::int64_t b, std::int64_t c);
std::string format_form(const BQForm& f, const std::string& y = "Y", const std::string& x = "X");

enum class Move {
    X_SHIFT,   // X = Y + X'
    Y_SHIFT,   // Y = X + Y'
};

const char* move_name(Move m);

struct SubstitutionLog {
    std::vector<Move> moves;

    BQForm replay(const BQForm& start) const;
    // Maps final-form arguments (X, Y) back to the start form's arguments.
    std::pair<BigInt, BigInt> back_substitute(const BigInt& X, const BigInt& Y) const;
};

class UltimateFormReached : public Error {
public:
    explicit UltimateFormReached(const BQForm& f);
    const BQForm& form() const noexcept { return form_; }

private:
    BQForm form_;
};

BQForm apply_move(const BQForm& f, Move m);

// k = isqrt(A): b = (k+1)^2 - A, c = A - k^2, a = -(A - k(k+1)).
BQForm start_form(Radicand A);

struct ReduceStep {
    BQForm form;
    Move move;
};

// r > 1: X shift; r < 0: Y shift; r == 1 throws UltimateFormReached.
ReduceStep reduce_step(const BQForm& f);
inline bool is_ultimate(const BQForm& f) { return f.r() == 1; }

// Priority I > IV > II > III > V.
std::vector<FormClass> matching_classes(const BQForm& f);
std::optional<FormClass> try_classify(const BQForm& f);
FormClass classify(const BQForm& f);   // throws Unclassifiable

// Step budget for a full reduction: 4 sqrt(A) (ln A + 1).
std::uint64_t reduction_budget(Radicand A);

struct Reduction {
    BQForm start;
    BQForm final_form;
    SubstitutionLog log;
};

// Runs reduce_step until the ultimate form; StepBudgetExceeded past the budget.
Reduction reduce_full(Radicand A, std::optional<std::uint64_t> budget = std::nullopt);

struct InverseResult {
    DistinctiveParams params;
    PellSolution solution;
    BQForm final_form;
    SubstitutionLog log;
    Representation representation;
    std::uint64_t steps = 0;
};

// Reduces from the start form and stops at the first classified form whose parameters
// produce a verified solution; the minimum x over the candidate parameter layouts is kept.
// Throws Unclassifiable when the ultimate form is reached first.
InverseResult inverse_solve(Radicand A);

// One substitution per line, reducing `from` until it represents +1 or -1 at X = Y = 1.
std::vector<std::string> reduction_transcript(const BQForm& from, std::uint64_t max_steps = 100000);

}  // namespace pell
