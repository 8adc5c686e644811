#pragma once

#include <cstdint>
#include <string>

#include "pell/bigint.hpp"

namespace pell {

enum class FormClass {
    I_EQUAL_SQUARES,
    II_DOUBLE_SQUARES,
    III_SUM_EQUALS_CROSS,
    IV_NO_CROSS,
    V_SQUARE_EQUALS_CROSS,
};

const char* class_name(FormClass c);   // "I" .. "V"
const char* class_tag(FormClass c);    // full enum spelling

// Class I:   b(l^2 - m^2) - 2alm = sign,          A = a^2 + b^2
// Class II:  b|l^2 - 2m^2| - 2alm = sign,         A = a^2 + 2b^2
// Class III: 2alm - b(l^2 + 2m^2) = sign,         A = a^2 - 2b^2
// Class IV:  a S^2 - b Q^2 = 1  (a=p1, b=p2, l=S, m=Q), A = p1 p2
// Class V:   a S^2 - b Q^2 = 2 sign (same layout), A = p1 p2
struct DistinctiveParams {
    FormClass cls = FormClass::I_EQUAL_SQUARES;
    BigInt a, b, l, m;
    int sign = 1;
};

// Parameters of y^2 - R x^2 = -3 with R = a^2 + 3b^2 and 2alm - b|l^2 - 3m^2| = sign.
// even_case: R = 4A for A = 1 mod 4, and the solution for A is (2x, y).
struct Minus3Params {
    BigInt a, b, l, m;
    int sign = 1;
    bool even_case = false;
};

enum class RepKind { SUM_SQ, SUM_2SQ, DIFF_2SQ, SUM_3SQ, COPRIME_FACTORS };

const char* rep_kind_name(RepKind k);

// For COPRIME_FACTORS, a = p1 and b = p2.
struct Representation {
    RepKind kind = RepKind::SUM_SQ;
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    BigInt value() const;   // reconstructs A from (a, b)
    bool operator==(const Representation& o) const { return kind == o.kind && a == o.a && b == o.b; }
};

std::string to_string(const Representation& r);

}  // namespace pell
