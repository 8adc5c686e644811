#pragma once

#include <cstdint>

#include "pell/bigint.hpp"

namespace pell {

// A solution of y^2 - A x^2 = rhs. Only built through make_solution, which checks the identity.
struct PellSolution {
    BigInt A;
    BigInt x;
    BigInt y;
    int rhs = 1;

    bool holds() const;
    bool operator==(const PellSolution& o) const {
        return A == o.A && x == o.x && y == o.y && rhs == o.rhs;
    }
};

// Throws ConditionViolated when y^2 - A x^2 != rhs.
PellSolution make_solution(const BigInt& A, const BigInt& x, const BigInt& y, int rhs = 1);

// Recovers y >= 0 from A x^2 + rhs; throws ConditionViolated if that is not a perfect square.
PellSolution solution_from_x(const BigInt& A, const BigInt& x, int rhs = 1);

}  // namespace pell
