#pragma once

#include <cstdint>
#include <optional>

#include "pell/bigint.hpp"
#include "pell/params.hpp"
#include "pell/solution.hpp"

namespace pell {

// Left side of the class condition (see DistinctiveParams); class V returns the undivided +-2.
BigInt condition_value(const DistinctiveParams& p);
bool condition_holds(const DistinctiveParams& p);
BigInt radicand_of(const DistinctiveParams& p);

// Builds params and fills in the sign from the condition; throws ConditionViolated.
DistinctiveParams make_params(FormClass cls, const BigInt& a, const BigInt& b, const BigInt& l, const BigInt& m);

// branch = +1 when the additive combination verified, -1 for the subtractive one.
PellSolution x_4n1(const DistinctiveParams& p);
PellSolution x_8n3(const DistinctiveParams& p, int* branch = nullptr);
PellSolution x_8n7(const DistinctiveParams& p, int* branch = nullptr);

PellSolution x_composite_even(const BigInt& p1, const BigInt& p2, const BigInt& S, const BigInt& Q);
PellSolution x_composite_odd(const BigInt& p1, const BigInt& p2, const BigInt& S, const BigInt& Q);

// -3 companion: R = a^2 + 3b^2, x = l^2 + 3m^2, y from whichever sign branch verifies.
BigInt minus3_condition_value(const Minus3Params& p);
PellSolution x_minus3(const Minus3Params& p);

// Dispatches on p.cls.
PellSolution solve_params(const DistinctiveParams& p);

// Representation encoded by the params (IV/V give the factor pair).
Representation representation_of(const DistinctiveParams& p);

enum class Route {
    PRIME_4N1,         // class I path
    PRIME_8N3,         // class II path
    PRIME_8N7,         // class III path
    COMPOSITE,         // coprime factor pair exists (IV/V)
    CF_FALLBACK,       // 2 and prime powers
};

const char* route_name(Route r);
Route classify_A(std::uint64_t A);

// SUM_SQ: smallest a among representations with b odd (any b when A is even).
// Others: smallest a >= 0. COPRIME_FACTORS: smallest p2 > 1, returned as a = A/p2, b = p2.
// Throws NotRepresentable.
Representation find_representation(std::uint64_t A, RepKind kind);

}  // namespace pell
