#include "pell/cf_engine.hpp"

#include <cmath>

#include "pell/case_solvers.hpp"
#include "pell/errors.hpp"

namespace pell {

namespace {

void check_radicand(Radicand A) {
    if (A < 2 || A >= kMaxRadicand) throw Error(Errc::InvalidArgument, "radicand out of range: " + std::to_string(A));
    if (is_square_u64(A)) throw Error(Errc::PerfectSquare, std::to_string(A) + " is a perfect square");
}

struct Next {
    std::uint64_t d, P, Q;
};

inline Next next_state(Radicand A, std::uint64_t d0, std::uint64_t P, std::uint64_t Q) {
    std::uint64_t d = (P + d0) / Q;
    std::uint64_t Pn = d * Q - P;
    std::uint64_t Qn = (A - Pn * Pn) / Q;
    return {d, Pn, Qn};
}

std::optional<ShortcutHit> plus_hit(ShortcutKind kind, std::uint64_t j, const DistinctiveParams& p) {
    if (!condition_holds(p)) return std::nullopt;
    try {
        return ShortcutHit{kind, j, p, solve_params(p)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<ShortcutHit> minus3_hit(ShortcutKind kind, std::uint64_t j, Minus3Params p) {
    BigInt v = minus3_condition_value(p);
    if (v != 1 && v != -1) return std::nullopt;
    p.sign = v > 0 ? 1 : -1;
    try {
        return ShortcutHit{kind, j, p, x_minus3(p)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

DistinctiveParams unsigned_params(FormClass cls, const BigInt& a, const BigInt& b, const BigInt& l, const BigInt& m) {
    DistinctiveParams p{cls, a, b, l, m, 1};
    BigInt v = condition_value(p);
    if (sgn(v) < 0) p.sign = -1;
    return p;
}

// at = a_j, r = r_j, r1 = r_{j-1}, Bj1 = B_{j-1}, Bj2 = B_{j-2}
std::optional<ShortcutHit> evaluate(int rhs, std::uint64_t j, std::uint64_t at, std::uint64_t r, std::uint64_t r1,
                                    const BigInt& Bj1, const BigInt& Bj2) {
    if (rhs == -3 ? (r != 3 * r1 && r1 != 3 * r)
                  : (r != r1 && r != 2 * r1 && r1 != 2 * r && r1 + r != 2 * at && r != 2 * at && at % r != 0))
        return std::nullopt;
    const BigInt a = from_u64(at), R = from_u64(r), R1 = from_u64(r1);
    if (rhs == -3) {
        if (r == 3 * r1)
            if (auto h = minus3_hit(ShortcutKind::TRIPLE_R_FWD, j, {a, R1, Bj1, Bj2})) return h;
        if (r1 == 3 * r)
            if (auto h = minus3_hit(ShortcutKind::TRIPLE_R_BWD, j, {a, R, Bj2, Bj1})) return h;
        return std::nullopt;
    }
    if (r == r1)
        if (auto h = plus_hit(ShortcutKind::EQUAL_R, j, unsigned_params(FormClass::I_EQUAL_SQUARES, a, R, Bj1, Bj2)))
            return h;
    if (r == 2 * r1)
        if (auto h = plus_hit(ShortcutKind::DOUBLE_R_FWD, j,
                              unsigned_params(FormClass::II_DOUBLE_SQUARES, a, R1, Bj1, Bj2)))
            return h;
    if (r1 == 2 * r)
        if (auto h = plus_hit(ShortcutKind::DOUBLE_R_BWD, j,
                              unsigned_params(FormClass::II_DOUBLE_SQUARES, a, R, Bj2, Bj1)))
            return h;
    if (r1 + r == 2 * at)
        if (auto h = plus_hit(ShortcutKind::SUM_EQ_2A, j,
                              unsigned_params(FormClass::III_SUM_EQUALS_CROSS, a + R1, R1, Bj1 + Bj2, Bj2)))
            return h;
    if (r == 2 * at) {
        // factor pair {a_j, 2 r_{j-1} + a_j}; S = B_{j-1}, Q = B_{j-1} + 2 B_{j-2}
        const BigInt S = Bj1, Q = Bj1 + 2 * Bj2, q = 2 * R1 + a;
        for (const auto& [p1, p2] : {std::pair{a, q}, std::pair{q, a}})
            if (auto h = plus_hit(ShortcutKind::R_EQ_2A, j,
                                  unsigned_params(FormClass::V_SQUARE_EQUALS_CROSS, p1, p2, S, Q)))
                return h;
    }
    if (r != 0 && at % r == 0 && at > 0) {
        const BigInt K = from_u64(at / r);
        const BigInt Q = Bj1, S = K * Bj1 + Bj2, q = R1 + K * K * R;
        const DistinctiveParams orders[] = {
            {FormClass::IV_NO_CROSS, R, q, S, Q, 1},
            {FormClass::IV_NO_CROSS, q, R, Q, S, 1},
            {FormClass::IV_NO_CROSS, q, R, S, Q, 1},
            {FormClass::IV_NO_CROSS, R, q, Q, S, 1},
        };
        for (const auto& p : orders)
            if (auto h = plus_hit(ShortcutKind::K_TIMES_R, j, p)) return h;
    }
    return std::nullopt;
}

}  // namespace

CFStep expand_step(Radicand A, const std::optional<CFStep>& prev) {
    check_radicand(A);
    const std::uint64_t d0 = isqrt_u64(A);
    const std::uint64_t P = prev ? prev->shift : 0;
    const std::uint64_t Q = prev ? prev->remainder : 1;
    const std::uint64_t idx = prev ? prev->index + 1 : 1;
    if (Q == 0 || (prev && (P > d0 || (A - P * P) % Q != 0)))
        throw Error(Errc::InvalidArgument, "previous step is not a state of sqrt(" + std::to_string(A) + ")");
    Next n = next_state(A, d0, P, Q);
    return {idx, n.d, n.P, n.Q};
}

std::uint64_t CFExpansion::period_length() const {
    if (!complete()) throw Error(Errc::InvalidArgument, "expansion of " + std::to_string(A_) + " is partial");
    return period_;
}

std::uint64_t CFExpansion::quotient(std::uint64_t n) const {
    if (n == 0) return d0_;
    if (complete()) return steps_[(n - 1) % period_ + 1].quotient;
    if (n < steps_.size()) return steps_[n].quotient;
    throw Error(Errc::IndexBeyondExpansion,
                "d_" + std::to_string(n) + " needs " + std::to_string(n + 1) + " steps, have " +
                    std::to_string(steps_.size()));
}

std::vector<std::uint64_t> CFExpansion::period_quotients() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= period_length(); ++n) out.push_back(quotient(n));
    return out;
}

std::uint64_t default_step_budget(Radicand A) {
    return static_cast<std::uint64_t>(10.0 * std::sqrt(static_cast<double>(A))) + 100;
}

CFExpansion expand_sqrt(Radicand A, std::optional<std::uint64_t> max_steps) {
    check_radicand(A);
    const std::uint64_t budget = max_steps.value_or(default_step_budget(A));
    CFExpansion e;
    e.A_ = A;
    e.d0_ = isqrt_u64(A);
    std::uint64_t P = 0, Q = 1;
    for (std::uint64_t i = 1; i <= budget; ++i) {
        Next n = next_state(A, e.d0_, P, Q);
        P = n.P;
        Q = n.Q;
        e.steps_.push_back({i, n.d, P, Q});
        if (i > 1 && P == e.steps_[0].shift && Q == e.steps_[0].remainder) {
            e.period_ = i - 1;
            return e;
        }
    }
    throw Error(Errc::StepBudgetExceeded, "period of sqrt(" + std::to_string(A) + ") not closed within " +
                                              std::to_string(budget) + " steps");
}

CFExpansion expand_prefix(Radicand A, std::uint64_t count) {
    check_radicand(A);
    CFExpansion e;
    e.A_ = A;
    e.d0_ = isqrt_u64(A);
    std::uint64_t P = 0, Q = 1;
    for (std::uint64_t i = 1; i <= count; ++i) {
        Next n = next_state(A, e.d0_, P, Q);
        P = n.P;
        Q = n.Q;
        e.steps_.push_back({i, n.d, P, Q});
        if (i > 1 && P == e.steps_[0].shift && Q == e.steps_[0].remainder) {
            e.period_ = i - 1;
            break;
        }
    }
    return e;
}

namespace {

BigInt run_recurrence(const CFExpansion& e, std::int64_t n, BigInt prev2, BigInt prev1) {
    if (n < -2) throw Error(Errc::IndexBeyondExpansion, "index below -2");
    if (n == -2) return prev2;
    if (n == -1) return prev1;
    if (!e.complete() && static_cast<std::uint64_t>(n) + 1 > e.steps().size())
        throw Error(Errc::IndexBeyondExpansion, "convergent " + std::to_string(n) + " needs " +
                                                    std::to_string(n + 1) + " quotients");
    for (std::int64_t k = 0; k <= n; ++k) {
        BigInt next = from_u64(e.quotient(static_cast<std::uint64_t>(k))) * prev1 + prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

}  // namespace

BigInt convergent(const CFExpansion& e, std::int64_t n) { return run_recurrence(e, n, 1, 0); }

BigInt numerator(const CFExpansion& e, std::int64_t n) { return run_recurrence(e, n, 0, 1); }

const char* shortcut_name(ShortcutKind k) {
    switch (k) {
        case ShortcutKind::EQUAL_R: return "EQUAL_R";
        case ShortcutKind::DOUBLE_R_FWD: return "DOUBLE_R_FWD";
        case ShortcutKind::DOUBLE_R_BWD: return "DOUBLE_R_BWD";
        case ShortcutKind::SUM_EQ_2A: return "SUM_EQ_2A";
        case ShortcutKind::K_TIMES_R: return "K_TIMES_R";
        case ShortcutKind::R_EQ_2A: return "R_EQ_2A";
        case ShortcutKind::TRIPLE_R_FWD: return "TRIPLE_R_FWD";
        case ShortcutKind::TRIPLE_R_BWD: return "TRIPLE_R_BWD";
    }
    return "?";
}

std::optional<ShortcutHit> scan_shortcuts(const CFExpansion& prefix, int rhs) {
    if (rhs != 1 && rhs != -3) throw Error(Errc::InvalidArgument, "rhs must be 1 or -3");
    const auto& st = prefix.steps();
    if (st.size() < 2) throw Error(Errc::InvalidArgument, "pattern scan needs two expanded steps");
    const std::uint64_t j = st.size();
    const CFStep& cur = st[j - 1];
    const CFStep& prev = st[j - 2];
    BigInt Bj1 = convergent(prefix, static_cast<std::int64_t>(j) - 1);
    BigInt Bj2 = convergent(prefix, static_cast<std::int64_t>(j) - 2);
    return evaluate(rhs, j, cur.shift, cur.remainder, prev.remainder, Bj1, Bj2);
}

ShortcutScanner::ShortcutScanner(Radicand A, int rhs, bool windowed)
    : A_(A), d0_(0), rhs_(rhs), windowed_(windowed && rhs == 1) {
    check_radicand(A);
    if (rhs != 1 && rhs != -3) throw Error(Errc::InvalidArgument, "rhs must be 1 or -3");
    d0_ = isqrt_u64(A);
}

std::optional<ShortcutHit> ShortcutScanner::advance() {
    if (closed_) return std::nullopt;
    Next n = next_state(A_, d0_, P_, Q_);
    const std::uint64_t prevP = P_, prevQ = Q_;
    ++j_;
    BigInt B = from_u64(n.d) * B1_ + B2_;
    B2_ = std::move(B1_);
    B1_ = std::move(B);
    if (rhs_ == -3) {
        BigInt y = from_u64(n.d) * y1_ + y2_;
        y2_ = std::move(y1_);
        y1_ = std::move(y);
    }
    P_ = n.P;
    Q_ = n.Q;
    if (j_ == 1) {
        firstP_ = P_;
        firstQ_ = Q_;
        return std::nullopt;
    }
    if (P_ == firstP_ && Q_ == firstQ_) {
        closed_ = true;
        scanning_ = false;
        return std::nullopt;
    }
    if (!scanning_) return std::nullopt;
    if (windowed_ && P_ == prevP) {
        scanning_ = false;
        return std::nullopt;
    }
    auto hit = evaluate(rhs_, j_, P_, Q_, prevQ, B1_, B2_);
    if (windowed_ && Q_ == prevQ) scanning_ = false;
    return hit;
}

SolveResult solve_standard_traced(Radicand A) {
    CFExpansion e = expand_sqrt(A);
    const std::uint64_t L = e.period_length();
    const std::uint64_t N = L % 2 == 0 ? L - 1 : 2 * L - 1;
    BigInt x = convergent(e, static_cast<std::int64_t>(N));
    return {solution_from_x(from_u64(A), x, 1), "STANDARD", L + 1, std::nullopt};
}

PellSolution solve_standard(Radicand A) { return solve_standard_traced(A).solution; }

SolveResult solve_fast(Radicand A) {
    ShortcutScanner sc(A, 1);
    const std::uint64_t budget = default_step_budget(A);
    // once the window has closed the rest is the standard walk
    while (sc.scanning()) {
        if (sc.steps() >= budget)
            throw Error(Errc::StepBudgetExceeded, "period of sqrt(" + std::to_string(A) + ") not closed");
        if (auto hit = sc.advance()) {
            PellSolution s = hit->solution;
            return {std::move(s), shortcut_name(hit->kind), sc.steps(), std::move(hit)};
        }
    }
    SolveResult r = solve_standard_traced(A);
    r.method = "STANDARD_FALLBACK";
    return r;
}

}  // namespace pell
