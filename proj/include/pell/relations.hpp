#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pell/bigint.hpp"
#include "pell/params.hpp"
#include "pell/solution.hpp"

namespace pell {

// Horizontal family with fixed (l, m): a_i = a0 + i k, b_i = b0 + i t.
//   class I:   k = l^2 - m^2,    t = 2lm, S = l^2 + m^2, A = a^2 + b^2
//   class II:  k = |l^2 - 2m^2|, t = 2lm, S = l^2 + 2m^2, A = a^2 + 2b^2
//   class III: k = l^2 + 2m^2,   t = 2lm, S = l^2 - 2m^2 (signed), A = a^2 - 2b^2
// Seed pairs may be negative.
struct SolutionFamily {
    FormClass cls = FormClass::I_EQUAL_SQUARES;
    BigInt l, m, k, t, S;
    BigInt a0, b0;
    int sign = 1;        // signed right side of the class condition, fixed across shifts
    BigInt A0;
    BigInt x0;           // signed seed value; |x0| solves the seed when A0 is valid
};

// InvalidArgument if gcd(l, m) != 1 or the class is not I/II/III; ConditionViolated otherwise.
SolutionFamily make_family(FormClass cls, const BigInt& l, const BigInt& m, const BigInt& a0, const BigInt& b0);

struct ShiftResult {
    std::int64_t i = 0;
    BigInt A, x, y;
    BigInt a, b;
    bool minus_one = false;       // i == -1
    bool minimal_seed = false;    // |k| < |a_i| and |t| < |b_i|
    bool primitive_hint = false;  // i == -1 with |a_{-1}| > |a_0|
    PellSolution solution;
};

// SquareTarget when A_i <= 1 or a perfect square.
ShiftResult shift(const SolutionFamily& f, std::int64_t i);

// Even: p01 S^2 - p02 Q^2 = 1, x = 2QS.  Odd: p01 S^2 - p02 Q^2 = +-2, x = SQ.
struct CompositeFamily {
    bool odd = false;
    BigInt p01, p02, S, Q;
    BigInt A0, x0;
};

CompositeFamily make_composite(bool odd, const BigInt& p01, const BigInt& p02, const BigInt& S, const BigInt& Q);

struct CompositeShift {
    std::int64_t i = 0;
    BigInt A, x, y, p1, p2;
    PellSolution solution;
};

// p1 = p01 + i Q^2, p2 = p02 + i S^2. NonPositiveFactor, SquareTarget.
CompositeShift shift_composite(const CompositeFamily& f, std::int64_t i);

// Seeds (a0, b0) from (g, d, l, m). The unimodular condition is checked and must be +-1.
std::pair<BigInt, BigInt> vertical_4n1(const BigInt& g, const BigInt& d, const BigInt& l, const BigInt& m);
std::pair<BigInt, BigInt> vertical_8n3(const BigInt& g1, const BigInt& d, const BigInt& l, const BigInt& m);
std::pair<BigInt, BigInt> vertical_8n7(const BigInt& g1, const BigInt& d, const BigInt& l, const BigInt& m);

// Returns (p01, p02). Even needs Q l - S m = 1, odd needs l Q - m S = 1.
std::pair<BigInt, BigInt> vertical_composite(const BigInt& l, const BigInt& m, const BigInt& Q, const BigInt& S,
                                             bool odd);

using FamilyParams = std::map<std::string, std::int64_t>;

// Named parameterizations: 2a 2b 2c 2d 2e (class I), 3a 3b 3c (class II), 4a 4b (class III).
// "sign" selects the upper (+1, default) or lower (-1) sign where a rule has one.
// Returned params hold the seed (a0, b0) in (a, b); the seed may be signed.
DistinctiveParams identity_family(const std::string& id, const FamilyParams& params);
std::vector<std::string> identity_family_ids();
std::vector<std::string> identity_family_keys(const std::string& id);

struct FamilyRecord {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;
    std::int64_t i = 0;
    BigInt A, x, y;
    bool verified = false;
    bool minus_one = false;
    std::optional<bool> minimal_seed;
};

std::string to_json_line(const FamilyRecord& r);

}  // namespace pell
