#pragma once

#include <cstdint>
#include <optional>

#include "pell/bigint.hpp"
#include "pell/params.hpp"
#include "pell/solution.hpp"

// Brute-force ground truth. Shares nothing with the solver code paths beyond big-integer arithmetic.
namespace pell::oracle {

std::uint64_t isqrt(std::uint64_t n);
BigInt isqrt(const BigInt& n);

// Smallest x in [1, x_bound] with A x^2 + 1 a perfect square. PerfectSquare for square A.
std::optional<PellSolution> brute_force_pell(std::uint64_t A, std::uint64_t x_bound);

// Smallest x in [1, x_bound] with A x^2 + rhs a non-negative perfect square.
std::optional<PellSolution> brute_force_rhs(std::uint64_t A, std::int64_t rhs, std::uint64_t x_bound);

// (yY + s A xX, yX + s xY) for s = +1 or -1. MixedRadicand when the radicands differ.
PellSolution compose(const PellSolution& s1, const PellSolution& s2, int sign);

// Exhaustive scan, smallest a first (smallest p2 > 1 for COPRIME_FACTORS, returned as (A/p2, p2)).
std::optional<Representation> decompose_brute(std::uint64_t A, RepKind kind);

}  // namespace pell::oracle
