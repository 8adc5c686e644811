#include "pell/params.hpp"

namespace pell {

const char* class_name(FormClass c) {
    switch (c) {
        case FormClass::I_EQUAL_SQUARES: return "I";
        case FormClass::II_DOUBLE_SQUARES: return "II";
        case FormClass::III_SUM_EQUALS_CROSS: return "III";
        case FormClass::IV_NO_CROSS: return "IV";
        case FormClass::V_SQUARE_EQUALS_CROSS: return "V";
    }
    return "?";
}

const char* class_tag(FormClass c) {
    switch (c) {
        case FormClass::I_EQUAL_SQUARES: return "I_EQUAL_SQUARES";
        case FormClass::II_DOUBLE_SQUARES: return "II_DOUBLE_SQUARES";
        case FormClass::III_SUM_EQUALS_CROSS: return "III_SUM_EQUALS_CROSS";
        case FormClass::IV_NO_CROSS: return "IV_NO_CROSS";
        case FormClass::V_SQUARE_EQUALS_CROSS: return "V_SQUARE_EQUALS_CROSS";
    }
    return "?";
}

const char* rep_kind_name(RepKind k) {
    switch (k) {
        case RepKind::SUM_SQ: return "SUM_SQ";
        case RepKind::SUM_2SQ: return "SUM_2SQ";
        case RepKind::DIFF_2SQ: return "DIFF_2SQ";
        case RepKind::SUM_3SQ: return "SUM_3SQ";
        case RepKind::COPRIME_FACTORS: return "COPRIME_FACTORS";
    }
    return "?";
}

BigInt Representation::value() const {
    BigInt x = from_u64(a), y = from_u64(b);
    switch (kind) {
        case RepKind::SUM_SQ: return x * x + y * y;
        case RepKind::SUM_2SQ: return x * x + 2 * y * y;
        case RepKind::DIFF_2SQ: return x * x - 2 * y * y;
        case RepKind::SUM_3SQ: return x * x + 3 * y * y;
        case RepKind::COPRIME_FACTORS: return x * y;
    }
    return 0;
}

std::string to_string(const Representation& r) {
    const std::string a = std::to_string(r.a), b = std::to_string(r.b);
    switch (r.kind) {
        case RepKind::SUM_SQ: return a + "^2 + " + b + "^2";
        case RepKind::SUM_2SQ: return a + "^2 + 2*" + b + "^2";
        case RepKind::DIFF_2SQ: return a + "^2 - 2*" + b + "^2";
        case RepKind::SUM_3SQ: return a + "^2 + 3*" + b + "^2";
        case RepKind::COPRIME_FACTORS: return a + "*" + b;
    }
    return "";
}

}  // namespace pell
