#include "pell/relations.hpp"

#include <json.hpp>

#include "pell/case_solvers.hpp"
#include "pell/errors.hpp"

namespace pell {

namespace {

int unit_sign(const BigInt& v, const char* what) {
    if (v == 1) return 1;
    if (v == -1) return -1;
    throw Error(Errc::ConditionViolated, std::string(what) + " = " + v.get_str() + ", expected +-1");
}

void check_seed_square(const BigInt& A) {
    if (sgn(A) <= 0 || A == 1 || is_square(A))
        throw Error(Errc::SquareTarget, "A = " + A.get_str() + " is not a valid radicand");
}

}  // namespace

SolutionFamily make_family(FormClass cls, const BigInt& l, const BigInt& m, const BigInt& a0, const BigInt& b0) {
    if (cls != FormClass::I_EQUAL_SQUARES && cls != FormClass::II_DOUBLE_SQUARES &&
        cls != FormClass::III_SUM_EQUALS_CROSS)
        throw Error(Errc::InvalidArgument, "horizontal families exist for classes I, II, III");
    if (gcd(l, m) != 1) throw Error(Errc::InvalidArgument, "gcd(l, m) = " + BigInt(gcd(l, m)).get_str() + ", must be 1");
    SolutionFamily f;
    f.cls = cls;
    f.l = l;
    f.m = m;
    f.a0 = a0;
    f.b0 = b0;
    f.t = 2 * l * m;
    BigInt inner;
    switch (cls) {
        case FormClass::I_EQUAL_SQUARES:
            f.k = l * l - m * m;
            f.S = l * l + m * m;
            f.A0 = a0 * a0 + b0 * b0;
            inner = b0 * f.t + a0 * f.k;
            f.x0 = 2 * inner * f.S;
            break;
        case FormClass::II_DOUBLE_SQUARES:
            f.k = abs(BigInt(l * l - 2 * m * m));
            f.S = l * l + 2 * m * m;
            f.A0 = a0 * a0 + 2 * b0 * b0;
            inner = a0 * f.k + 2 * b0 * f.t;
            f.x0 = inner * f.S;
            break;
        default:
            f.k = l * l + 2 * m * m;
            f.S = l * l - 2 * m * m;
            f.A0 = a0 * a0 - 2 * b0 * b0;
            inner = a0 * f.k - 2 * b0 * f.t;
            f.x0 = inner * f.S;
            break;
    }
    f.sign = unit_sign(condition_value(DistinctiveParams{cls, a0, b0, l, m, 1}), "seed condition");
    return f;
}

ShiftResult shift(const SolutionFamily& f, std::int64_t i) {
    const BigInt I = from_i64(i);
    ShiftResult r;
    r.i = i;
    r.a = f.a0 + I * f.k;
    r.b = f.b0 + I * f.t;
    const BigInt S2 = f.S * f.S;
    BigInt y;
    switch (f.cls) {
        case FormClass::I_EQUAL_SQUARES:
            r.A = r.a * r.a + r.b * r.b;
            r.x = abs(BigInt(f.x0 + 2 * I * S2 * f.S));
            y = 2 * r.A * S2 - 1;
            break;
        case FormClass::II_DOUBLE_SQUARES:
            r.A = r.a * r.a + 2 * r.b * r.b;
            r.x = abs(BigInt(f.x0 + I * S2 * f.S));
            y = r.A * S2 - 1;
            break;
        default:
            r.A = r.a * r.a - 2 * r.b * r.b;
            r.x = abs(BigInt(f.x0 + I * S2 * f.S));
            y = r.A * S2 + 1;
            break;
    }
    check_seed_square(r.A);
    // shifts keep the signed right side of the condition
    DistinctiveParams p{f.cls, r.a, r.b, f.l, f.m, f.sign};
    if (!condition_holds(p))
        throw Error(Errc::ConditionViolated, "shift " + std::to_string(i) + " broke the family condition");
    if (sgn(r.x) == 0) throw Error(Errc::SquareTarget, "shift " + std::to_string(i) + " gives the trivial solution");
    r.solution = make_solution(r.A, r.x, y, 1);
    r.y = r.solution.y;
    r.minus_one = i == -1;
    r.minimal_seed = abs(f.k) < abs(r.a) && abs(f.t) < abs(r.b);
    r.primitive_hint = i == -1 && abs(r.a) > abs(f.a0);
    return r;
}

CompositeFamily make_composite(bool odd, const BigInt& p01, const BigInt& p02, const BigInt& S, const BigInt& Q) {
    BigInt v = p01 * S * S - p02 * Q * Q;
    if (odd ? (v != 2 && v != -2) : v != 1)
        throw Error(Errc::ConditionViolated, "p01 S^2 - p02 Q^2 = " + v.get_str());
    CompositeFamily f{odd, p01, p02, S, Q, p01 * p02, odd ? BigInt(S * Q) : BigInt(2 * Q * S)};
    return f;
}

CompositeShift shift_composite(const CompositeFamily& f, std::int64_t i) {
    const BigInt I = from_i64(i);
    CompositeShift r;
    r.i = i;
    r.p1 = f.p01 + I * f.Q * f.Q;
    r.p2 = f.p02 + I * f.S * f.S;
    if (sgn(r.p1) <= 0 || sgn(r.p2) <= 0)
        throw Error(Errc::NonPositiveFactor, "shift " + std::to_string(i) + " gives p1=" + r.p1.get_str() +
                                                 " p2=" + r.p2.get_str());
    r.A = r.p1 * r.p2;
    check_seed_square(r.A);
    r.solution = f.odd ? x_composite_odd(r.p1, r.p2, f.S, f.Q) : x_composite_even(r.p1, r.p2, f.S, f.Q);
    r.x = r.solution.x;
    r.y = r.solution.y;
    return r;
}

std::pair<BigInt, BigInt> vertical_4n1(const BigInt& g, const BigInt& d, const BigInt& l, const BigInt& m) {
    const int s = unit_sign(l * d - m * g, "l d - m g");
    const BigInt g3 = g * g * g, d3 = d * d * d;
    const BigInt bracket = m * d3 - l * g3 - s * 3 * g * d;
    if (mpz_odd_p(bracket.get_mpz_t()))
        throw Error(Errc::ParityViolation, "m d^3 - l g^3 -+ 3gd = " + bracket.get_str() + " is odd");
    BigInt a0 = -bracket / 2, b0 = m * g3 + l * d3;
    unit_sign(condition_value(DistinctiveParams{FormClass::I_EQUAL_SQUARES, a0, b0, l, m, 1}), "class I seed");
    return {a0, b0};
}

std::pair<BigInt, BigInt> vertical_8n3(const BigInt& g1, const BigInt& d, const BigInt& l, const BigInt& m) {
    const int s = unit_sign(l * d - 2 * m * g1, "l d - 2 m g1");
    const BigInt g3 = g1 * g1 * g1, d3 = d * d * d;
    BigInt a0 = abs(BigInt(m * d3 - 2 * l * g3 - s * 3 * g1 * d)), b0 = 4 * m * g3 + l * d3;
    unit_sign(condition_value(DistinctiveParams{FormClass::II_DOUBLE_SQUARES, a0, b0, l, m, 1}), "class II seed");
    return {a0, b0};
}

std::pair<BigInt, BigInt> vertical_8n7(const BigInt& g1, const BigInt& d, const BigInt& l, const BigInt& m) {
    const int s = unit_sign(l * d - 2 * m * g1, "l d - 2 m g1");
    const BigInt g3 = g1 * g1 * g1, d3 = d * d * d;
    BigInt a0 = m * d3 - 2 * l * g3 + s * 3 * g1 * d, b0 = l * d3 - 4 * m * g3;
    unit_sign(condition_value(DistinctiveParams{FormClass::III_SUM_EQUALS_CROSS, a0, b0, l, m, 1}),
              "class III seed");
    return {a0, b0};
}

std::pair<BigInt, BigInt> vertical_composite(const BigInt& l, const BigInt& m, const BigInt& Q, const BigInt& S,
                                             bool odd) {
    if (Q * l - S * m != 1) throw Error(Errc::ConditionViolated, "Q l - S m = " + BigInt(Q * l - S * m).get_str());
    BigInt p01 = m * m * (3 * Q * l - S * m), p02 = l * l * (3 * S * m - Q * l);
    if (odd) {
        p01 *= 2;
        p02 *= 2;
    }
    return {p01, p02};
}

namespace {

struct Rule {
    const char* id;
    std::vector<std::string> keys;
};

const std::vector<Rule>& rules() {
    static const std::vector<Rule> r = {
        {"2a", {"g", "m", "sign"}},       {"2b", {"g", "T"}},
        {"2c", {"r", "d", "T", "sign"}},  {"2d", {"J", "T", "n1"}},
        {"2e", {"n1", "d", "T", "sign"}}, {"3a", {"g1", "m", "sign"}},
        {"3b", {"g1", "sign"}},           {"3c", {"g1", "K", "T", "sign"}},
        {"4a", {"g1"}},                   {"4b", {"g1", "sign"}},
    };
    return r;
}

BigInt get(const FamilyParams& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) {
        if (key == "sign") return 1;
        throw Error(Errc::InvalidArgument, "missing family parameter " + key);
    }
    if (key == "sign" && it->second != 1 && it->second != -1) throw Error(Errc::InvalidArgument, "sign must be +-1");
    return from_i64(it->second);
}

DistinctiveParams seed(FormClass cls, std::pair<BigInt, BigInt> ab, const BigInt& l, const BigInt& m) {
    return make_params(cls, ab.first, ab.second, l, m);
}

}  // namespace

std::vector<std::string> identity_family_ids() {
    std::vector<std::string> out;
    for (const auto& r : rules()) out.emplace_back(r.id);
    return out;
}

std::vector<std::string> identity_family_keys(const std::string& id) {
    for (const auto& r : rules())
        if (id == r.id) return r.keys;
    throw Error(Errc::UnknownFamily, id);
}

DistinctiveParams identity_family(const std::string& id, const FamilyParams& p) {
    for (const auto& key : identity_family_keys(id)) get(p, key);
    const BigInt s = get(p, "sign");
    const FormClass I = FormClass::I_EQUAL_SQUARES, II = FormClass::II_DOUBLE_SQUARES,
                    III = FormClass::III_SUM_EQUALS_CROSS;
    if (id == "2a") {
        const BigInt g = get(p, "g"), m = get(p, "m"), l = m * g + s;
        return seed(I, vertical_4n1(g, 1, l, m), l, m);
    }
    if (id == "2b") {
        // d = g - 1 with the lower sign of l d - m g
        const BigInt g = get(p, "g"), T = get(p, "T");
        const BigInt l = g * T + 1, m = (g - 1) * T + 1;
        return seed(I, vertical_4n1(g, g - 1, l, m), l, m);
    }
    if (id == "2c") {
        const BigInt r = get(p, "r"), d = get(p, "d"), T = get(p, "T");
        const BigInt g = r * d - s, m = 2 * d * T + 1, l = r * m - s * 2 * T;
        return seed(I, vertical_4n1(g, d, l, m), l, m);
    }
    if (id == "2d") {
        const BigInt J = get(p, "J"), T = get(p, "T"), n1 = get(p, "n1");
        const BigInt g = J + T * (J - 1), d = J - 1, r = T * J + J + 1;
        const BigInt l = 2 * g * n1 + r, m = 2 * d * n1 + J;
        return seed(I, vertical_4n1(g, d, l, m), l, m);
    }
    if (id == "2e") {
        const BigInt n1 = get(p, "n1"), d = get(p, "d"), T = get(p, "T");
        const BigInt m = n1 * d - s, l = n1 + T * m, g = 1 + d * T;
        return seed(I, vertical_4n1(g, d, l, m), l, m);
    }
    if (id == "3a" || id == "3b") {
        const BigInt g1 = get(p, "g1"), m = id == "3b" ? BigInt(1) : get(p, "m"), l = 2 * g1 * m + s;
        return seed(II, vertical_8n3(g1, 1, l, m), l, m);
    }
    if (id == "3c") {
        const BigInt g1 = get(p, "g1"), K = get(p, "K"), T = get(p, "T");
        const BigInt d = 2 * T * g1 + s, l = 2 * g1 * K + 1, m = T * l + s * K;
        return seed(II, vertical_8n3(g1, d, l, m), l, m);
    }
    if (id == "4a") {
        const BigInt g1 = get(p, "g1"), l = 2 * g1 + 1;
        return seed(III, vertical_8n7(g1, 1, l, 1), l, 1);
    }
    if (id == "4b") {
        const BigInt g1 = get(p, "g1"), m = 2 * g1, l = 4 * g1 * g1 + s;
        return seed(III, vertical_8n7(g1, 1, l, m), l, m);
    }
    throw Error(Errc::UnknownFamily, id);
}

std::string to_json_line(const FamilyRecord& r) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["i"] = r.i;
    j["A"] = to_decimal(r.A);
    j["x"] = to_decimal(r.x);
    j["y"] = to_decimal(r.y);
    j["verified"] = r.verified;
    j["minus_one"] = r.minus_one;
    if (r.minimal_seed) j["minimal_seed"] = *r.minimal_seed;
    return j.dump();
}

}  // namespace pell
