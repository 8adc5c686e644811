#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "pell/bigint.hpp"
#include "pell/cf_engine.hpp"
#include "pell/params.hpp"
#include "pell/solution.hpp"

namespace pell {

struct Minus3Result {
    PellSolution solution;     // rhs = -3, for A itself
    std::string method;        // TRIPLE_R_FWD, TRIPLE_R_BWD, CF_SWEEP or SMALL_SCAN
    std::uint64_t steps = 0;   // expansion steps of the swept radicand
    Radicand swept = 0;        // A, or 4A when A = 1 mod 4
    std::optional<Minus3Params> params;
};

// Minimal solution of y^2 - A x^2 = -3 for odd non-square A, or nullopt when none exists.
// Candidates are the convergents of two periods of sqrt(R), R = A (A = 3 mod 4) or 4A (A = 1 mod 4);
// this is exhaustive for R > 9. Smaller R use a bounded direct scan.
// A pattern hit keeps its tag only when it reproduces the swept minimum.
std::optional<Minus3Result> solve_minus3(Radicand A);

struct Minus3Shift {
    std::int64_t i = 0;
    BigInt A, x, y, a, b;
    PellSolution solution;
    std::optional<PellSolution> reduced;   // for A_i = 4A' with A' = 1 mod 4: (A', 2x, y)
};

// a_i = a0 + i|l^2 - 3m^2|, b_i = b0 + 2ilm. SquareTarget, ConditionViolated.
Minus3Shift shift_minus3(const Minus3Params& seed, std::int64_t i);

// b0 = 9g^3 m + l d^3, a0 = (3/2)|d^3 m + 9dmg^2 - 3d^2 lg - 3lg^3|, needs d l - 3 g m = +-1.
std::pair<BigInt, BigInt> vertical_minus3(const BigInt& g, const BigInt& d, const BigInt& l, const BigInt& m);

}  // namespace pell
