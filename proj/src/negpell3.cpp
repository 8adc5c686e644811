#include "pell/negpell3.hpp"

#include "pell/case_solvers.hpp"
#include "pell/errors.hpp"

namespace pell {

namespace {

constexpr std::uint64_t kSmallScanBound = 1000;

std::optional<Minus3Result> small_scan(Radicand A) {
    const BigInt a = from_u64(A);
    for (std::uint64_t x = 1; x <= kSmallScanBound; ++x) {
        BigInt X = from_u64(x), y;
        BigInt v = a * X * X - 3;
        if (sgn(v) >= 0 && is_square(v, &y)) return Minus3Result{make_solution(a, X, y, -3), "SMALL_SCAN", 0, A, {}};
    }
    return std::nullopt;
}

}  // namespace

std::optional<Minus3Result> solve_minus3(Radicand A) {
    if (A < 2 || A >= kMaxRadicand / 4) throw Error(Errc::InvalidArgument, "radicand out of range");
    if (is_square_u64(A)) throw Error(Errc::PerfectSquare, std::to_string(A) + " is a perfect square");
    if (A % 2 == 0) throw Error(Errc::InvalidArgument, "the -3 solver takes odd A");
    const bool even_case = A % 4 == 1;
    const Radicand R = even_case ? 4 * A : A;
    if (R <= 9) return small_scan(A);

    ShortcutScanner sc(R, -3, false);
    std::optional<ShortcutHit> first_hit;
    std::optional<Minus3Result> found;
    const BigInt Rb = from_u64(R);
    // norms of convergents repeat with period lcm(L, 2) <= 2L
    std::uint64_t L = 0;
    while (!found) {
        if (sc.period_closed()) break;
        auto hit = sc.advance();
        if (hit && !first_hit) first_hit = hit;
        if (sc.period_closed()) L = sc.steps() - 1;
        const BigInt& B = sc.B_last();
        const BigInt& y = sc.y_last();
        if (y * y - Rb * B * B == -3) found = Minus3Result{PellSolution{Rb, B, y, -3}, "CF_SWEEP", sc.steps(), R, {}};
    }
    if (!found) {
        CFExpansion e = expand_sqrt(R);
        L = e.period_length();
        BigInt B2 = 1, B1 = 0, y2 = 0, y1 = 1;
        for (std::uint64_t n = 0; n < 2 * L && !found; ++n) {
            BigInt d = from_u64(e.quotient(n));
            BigInt B = d * B1 + B2, y = d * y1 + y2;
            B2 = B1;
            B1 = B;
            y2 = y1;
            y1 = y;
            if (n + 1 <= sc.steps()) continue;   // already checked
            if (y * y - Rb * B * B == -3) found = Minus3Result{PellSolution{Rb, B, y, -3}, "CF_SWEEP", n + 1, R, {}};
        }
    }
    if (!found) return std::nullopt;

    Minus3Result res = *found;
    if (first_hit && first_hit->solution.x == res.solution.x) {
        res.method = shortcut_name(first_hit->kind);
        auto p = std::get<Minus3Params>(first_hit->extracted);
        p.even_case = even_case;
        res.params = p;
    }
    const BigInt a = from_u64(A);
    res.solution = even_case ? make_solution(a, 2 * res.solution.x, res.solution.y, -3)
                             : make_solution(a, res.solution.x, res.solution.y, -3);
    return res;
}

Minus3Shift shift_minus3(const Minus3Params& seed, std::int64_t i) {
    const BigInt I = from_i64(i);
    const BigInt k3 = abs(BigInt(seed.l * seed.l - 3 * seed.m * seed.m));
    Minus3Params p = seed;
    p.a = seed.a + I * k3;
    p.b = seed.b + 2 * I * seed.l * seed.m;
    BigInt v = minus3_condition_value(p);
    if (v != 1 && v != -1) throw Error(Errc::ConditionViolated, "-3 seed condition = " + v.get_str());
    Minus3Shift r;
    r.i = i;
    r.a = p.a;
    r.b = p.b;
    r.A = p.a * p.a + 3 * p.b * p.b;
    if (r.A <= 1 || is_square(r.A)) throw Error(Errc::SquareTarget, "A = " + r.A.get_str());
    r.solution = x_minus3(p);
    r.x = r.solution.x;
    r.y = r.solution.y;
    if (mpz_divisible_ui_p(r.A.get_mpz_t(), 4)) {
        BigInt q = r.A / 4;
        if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 1) r.reduced = make_solution(q, 2 * r.x, r.y, -3);
    }
    return r;
}

std::pair<BigInt, BigInt> vertical_minus3(const BigInt& g, const BigInt& d, const BigInt& l, const BigInt& m) {
    BigInt cond = d * l - 3 * g * m;
    if (cond != 1 && cond != -1) throw Error(Errc::ConditionViolated, "d l - 3 g m = " + cond.get_str());
    const BigInt inner = d * d * d * m + 9 * d * m * g * g - 3 * d * d * l * g - 3 * l * g * g * g;
    if (mpz_odd_p(inner.get_mpz_t()))
        throw Error(Errc::ParityViolation, "d^3 m + 9dmg^2 - 3d^2 lg - 3lg^3 = " + inner.get_str() + " is odd");
    BigInt a0 = 3 * abs(inner) / 2, b0 = 9 * g * g * g * m + l * d * d * d;
    BigInt v = minus3_condition_value(Minus3Params{a0, b0, l, m, 1, false});
    if (v != 1 && v != -1) throw Error(Errc::ConditionViolated, "-3 seed condition = " + v.get_str());
    return {a0, b0};
}

}  // namespace pell
