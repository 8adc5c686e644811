#include "pell/case_solvers.hpp"

#include <numeric>

#include "pell/errors.hpp"
#include "pell/primality.hpp"

namespace pell {

namespace {

void require_class(const DistinctiveParams& p, FormClass c, const char* fn) {
    if (p.cls != c) throw Error(Errc::InvalidArgument, std::string(fn) + " expects class " + class_name(c));
}

void require_condition(const DistinctiveParams& p) {
    if (!condition_holds(p))
        throw Error(Errc::ConditionViolated, std::string("class ") + class_name(p.cls) +
                                                 " condition evaluates to " + condition_value(p).get_str());
}

void require_nonsquare(const BigInt& A) {
    if (sgn(A) <= 0) throw Error(Errc::ConditionViolated, "radicand is not positive: " + A.get_str());
    if (is_square(A)) throw Error(Errc::PerfectSquare, A.get_str());
}

std::optional<PellSolution> try_solution(const BigInt& A, const BigInt& x, const BigInt& y) {
    if (sgn(x) == 0) return std::nullopt;
    PellSolution s{A, abs(x), abs(y), 1};
    if (!s.holds()) return std::nullopt;
    return s;
}

}  // namespace

BigInt condition_value(const DistinctiveParams& p) {
    const BigInt& a = p.a;
    const BigInt& b = p.b;
    const BigInt& l = p.l;
    const BigInt& m = p.m;
    switch (p.cls) {
        case FormClass::I_EQUAL_SQUARES: return b * (l * l - m * m) - 2 * a * l * m;
        case FormClass::II_DOUBLE_SQUARES: return b * abs(BigInt(l * l - 2 * m * m)) - 2 * a * l * m;
        case FormClass::III_SUM_EQUALS_CROSS: return 2 * a * l * m - b * (l * l + 2 * m * m);
        case FormClass::IV_NO_CROSS:
        case FormClass::V_SQUARE_EQUALS_CROSS: return a * l * l - b * m * m;
    }
    return 0;
}

bool condition_holds(const DistinctiveParams& p) {
    BigInt v = condition_value(p);
    switch (p.cls) {
        case FormClass::IV_NO_CROSS: return v == 1 && p.sign == 1;
        case FormClass::V_SQUARE_EQUALS_CROSS: return v == 2 * p.sign && (p.sign == 1 || p.sign == -1);
        default: return v == p.sign && (p.sign == 1 || p.sign == -1);
    }
}

BigInt radicand_of(const DistinctiveParams& p) {
    switch (p.cls) {
        case FormClass::I_EQUAL_SQUARES: return p.a * p.a + p.b * p.b;
        case FormClass::II_DOUBLE_SQUARES: return p.a * p.a + 2 * p.b * p.b;
        case FormClass::III_SUM_EQUALS_CROSS: return p.a * p.a - 2 * p.b * p.b;
        case FormClass::IV_NO_CROSS:
        case FormClass::V_SQUARE_EQUALS_CROSS: return p.a * p.b;
    }
    return 0;
}

DistinctiveParams make_params(FormClass cls, const BigInt& a, const BigInt& b, const BigInt& l, const BigInt& m) {
    DistinctiveParams p{cls, a, b, l, m, 1};
    BigInt v = condition_value(p);
    if (cls == FormClass::V_SQUARE_EQUALS_CROSS) {
        if (v == 2 || v == -2) p.sign = v > 0 ? 1 : -1;
    } else if (v == 1 || v == -1) {
        p.sign = v > 0 ? 1 : -1;
    }
    require_condition(p);
    return p;
}

PellSolution x_4n1(const DistinctiveParams& p) {
    require_class(p, FormClass::I_EQUAL_SQUARES, "x_4n1");
    require_condition(p);
    BigInt A = radicand_of(p);
    require_nonsquare(A);
    BigInt S = p.l * p.l + p.m * p.m;
    BigInt w = 2 * p.b * p.l * p.m + p.a * (p.l * p.l - p.m * p.m);
    BigInt y = 2 * A * S * S - 1;
    if (auto s = try_solution(A, 2 * w * S, y)) return *s;
    throw Error(Errc::ConditionViolated, "class I identity failed for A=" + A.get_str());
}

PellSolution x_8n3(const DistinctiveParams& p, int* branch) {
    require_class(p, FormClass::II_DOUBLE_SQUARES, "x_8n3");
    require_condition(p);
    BigInt A = radicand_of(p);
    require_nonsquare(A);
    BigInt k = abs(BigInt(p.l * p.l - 2 * p.m * p.m));
    BigInt S = p.l * p.l + 2 * p.m * p.m;
    BigInt y = A * S * S - 1;
    BigInt t = 4 * p.b * p.l * p.m;
    for (int br : {1, -1}) {
        if (auto s = try_solution(A, (t + br * p.a * k) * S, y)) {
            if (branch) *branch = br;
            return *s;
        }
    }
    throw Error(Errc::ConditionViolated, "class II identity failed for A=" + A.get_str());
}

PellSolution x_8n7(const DistinctiveParams& p, int* branch) {
    require_class(p, FormClass::III_SUM_EQUALS_CROSS, "x_8n7");
    require_condition(p);
    BigInt A = radicand_of(p);
    require_nonsquare(A);
    BigInt k = p.l * p.l + 2 * p.m * p.m;
    BigInt S = p.l * p.l - 2 * p.m * p.m;
    BigInt y = A * S * S + 1;
    BigInt t = 4 * p.b * p.l * p.m;
    for (int br : {-1, 1}) {
        if (auto s = try_solution(A, (p.a * k + br * t) * S, y)) {
            if (branch) *branch = br == -1 ? 1 : -1;
            return *s;
        }
    }
    throw Error(Errc::ConditionViolated, "class III identity failed for A=" + A.get_str());
}

PellSolution x_composite_even(const BigInt& p1, const BigInt& p2, const BigInt& S, const BigInt& Q) {
    if (sgn(p1) <= 0 || sgn(p2) <= 0) throw Error(Errc::NonPositiveFactor, "factor pair must be positive");
    if (p1 * S * S - p2 * Q * Q != 1)
        throw Error(Errc::ConditionViolated, "p1 S^2 - p2 Q^2 = " + BigInt(p1 * S * S - p2 * Q * Q).get_str());
    BigInt A = p1 * p2;
    require_nonsquare(A);
    if (auto s = try_solution(A, 2 * Q * S, 2 * p1 * S * S - 1)) return *s;
    throw Error(Errc::ConditionViolated, "composite even identity failed for A=" + A.get_str());
}

PellSolution x_composite_odd(const BigInt& p1, const BigInt& p2, const BigInt& S, const BigInt& Q) {
    if (sgn(p1) <= 0 || sgn(p2) <= 0) throw Error(Errc::NonPositiveFactor, "factor pair must be positive");
    BigInt v = p1 * S * S - p2 * Q * Q;
    if (v != 2 && v != -2) throw Error(Errc::ConditionViolated, "p1 S^2 - p2 Q^2 = " + v.get_str());
    BigInt A = p1 * p2;
    require_nonsquare(A);
    BigInt sum = p1 * S * S + p2 * Q * Q;
    if (auto s = try_solution(A, S * Q, sum / 2)) return *s;
    throw Error(Errc::ConditionViolated, "composite odd identity failed for A=" + A.get_str());
}

BigInt minus3_condition_value(const Minus3Params& p) {
    return 2 * p.a * p.l * p.m - p.b * abs(BigInt(p.l * p.l - 3 * p.m * p.m));
}

PellSolution x_minus3(const Minus3Params& p) {
    BigInt v = minus3_condition_value(p);
    if (v != 1 && v != -1) throw Error(Errc::ConditionViolated, "-3 condition evaluates to " + v.get_str());
    BigInt R = p.a * p.a + 3 * p.b * p.b;
    require_nonsquare(R);
    BigInt x = p.l * p.l + 3 * p.m * p.m;
    BigInt k3 = abs(BigInt(p.l * p.l - 3 * p.m * p.m));
    BigInt t = 6 * p.b * p.l * p.m;
    for (int br : {1, -1}) {
        PellSolution s{R, x, abs(BigInt(p.a * k3 + br * t)), -3};
        if (s.holds()) return s;
    }
    throw Error(Errc::ConditionViolated, "-3 identity failed for R=" + R.get_str());
}

PellSolution solve_params(const DistinctiveParams& p) {
    switch (p.cls) {
        case FormClass::I_EQUAL_SQUARES: return x_4n1(p);
        case FormClass::II_DOUBLE_SQUARES: return x_8n3(p);
        case FormClass::III_SUM_EQUALS_CROSS: return x_8n7(p);
        case FormClass::IV_NO_CROSS: return x_composite_even(p.a, p.b, p.l, p.m);
        case FormClass::V_SQUARE_EQUALS_CROSS: return x_composite_odd(p.a, p.b, p.l, p.m);
    }
    throw Error(Errc::InvalidArgument, "unknown class");
}

Representation representation_of(const DistinctiveParams& p) {
    auto mag = [](const BigInt& v) { return to_u64(BigInt(abs(v))); };
    switch (p.cls) {
        case FormClass::I_EQUAL_SQUARES: return {RepKind::SUM_SQ, mag(p.a), mag(p.b)};
        case FormClass::II_DOUBLE_SQUARES: return {RepKind::SUM_2SQ, mag(p.a), mag(p.b)};
        case FormClass::III_SUM_EQUALS_CROSS: return {RepKind::DIFF_2SQ, mag(p.a), mag(p.b)};
        default: return {RepKind::COPRIME_FACTORS, mag(p.a), mag(p.b)};
    }
}

const char* route_name(Route r) {
    switch (r) {
        case Route::PRIME_4N1: return "PRIME_4N1";
        case Route::PRIME_8N3: return "PRIME_8N3";
        case Route::PRIME_8N7: return "PRIME_8N7";
        case Route::COMPOSITE: return "COMPOSITE";
        case Route::CF_FALLBACK: return "CF_FALLBACK";
    }
    return "?";
}

Route classify_A(std::uint64_t A) {
    if (is_prime(A)) {
        if (A % 4 == 1) return Route::PRIME_4N1;
        if (A % 8 == 3) return Route::PRIME_8N3;
        if (A % 8 == 7) return Route::PRIME_8N7;
        return Route::CF_FALLBACK;
    }
    try {
        find_representation(A, RepKind::COPRIME_FACTORS);
        return Route::COMPOSITE;
    } catch (const Error&) {
        return Route::CF_FALLBACK;
    }
}

Representation find_representation(std::uint64_t A, RepKind kind) {
    using u64 = std::uint64_t;
    const u64 r = isqrt_u64(A);
    switch (kind) {
        case RepKind::SUM_SQ:
        case RepKind::SUM_2SQ:
        case RepKind::SUM_3SQ: {
            const u64 mult = kind == RepKind::SUM_SQ ? 1 : kind == RepKind::SUM_2SQ ? 2 : 3;
            for (u64 a = 0; a <= r; ++a) {
                u64 rest = A - a * a;
                if (rest % mult) continue;
                u64 b2 = rest / mult;
                if (b2 == 0 || !is_square_u64(b2)) continue;
                u64 b = isqrt_u64(b2);
                if (kind == RepKind::SUM_SQ && A % 2 == 1 && b % 2 == 0) continue;
                return {kind, a, b};
            }
            break;
        }
        case RepKind::DIFF_2SQ: {
            // reduced representations satisfy a^2 <= 2A
            const u64 hi = isqrt_u64(2 * A);
            for (u64 a = r; a <= hi; ++a) {
                if (a * a < A || (a * a - A) % 2) continue;
                u64 b2 = (a * a - A) / 2;
                if (is_square_u64(b2)) return {kind, a, isqrt_u64(b2)};
            }
            break;
        }
        case RepKind::COPRIME_FACTORS:
            // unitary divisors pair up as (d, A/d), so the smaller one is <= sqrt(A)
            for (u64 p2 = 2; p2 <= r; ++p2) {
                if (A % p2) continue;
                u64 p1 = A / p2;
                if (std::gcd(p1, p2) == 1) return {kind, p1, p2};
            }
            break;
    }
    throw Error(Errc::NotRepresentable, std::to_string(A) + " as " + rep_kind_name(kind));
}

}  // namespace pell
