#include "pell/solution.hpp"

#include "pell/errors.hpp"

namespace pell {

bool PellSolution::holds() const { return y * y - A * x * x == rhs; }

PellSolution make_solution(const BigInt& A, const BigInt& x, const BigInt& y, int rhs) {
    PellSolution s{A, abs(x), abs(y), rhs};
    if (!s.holds())
        throw Error(Errc::ConditionViolated,
                    "y^2 - A x^2 != " + std::to_string(rhs) + " for A=" + A.get_str() + " x=" + x.get_str());
    return s;
}

PellSolution solution_from_x(const BigInt& A, const BigInt& x, int rhs) {
    BigInt v = A * x * x + rhs;
    BigInt y;
    if (!is_square(v, &y))
        throw Error(Errc::ConditionViolated, "A x^2 + rhs is not a square for A=" + A.get_str() + " x=" + x.get_str());
    return PellSolution{A, abs(x), y, rhs};
}

}  // namespace pell
