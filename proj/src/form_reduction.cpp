#include "pell/form_reduction.hpp"

#include <array>
#include <cmath>

#include "pell/case_solvers.hpp"

namespace pell {

namespace {

std::string term(std::int64_t coef, const std::string& var, bool first) {
    std::string out;
    if (coef < 0) out = first ? "-" : " - ";
    else if (!first) out = " + ";
    std::uint64_t mag = coef < 0 ? static_cast<std::uint64_t>(-(coef + 1)) + 1 : static_cast<std::uint64_t>(coef);
    if (mag != 1) out += std::to_string(mag);
    return out + var;
}

}  // namespace

BQForm make_form(std::int64_t a, std::int64_t b, std::int64_t c) {
    __int128 det = static_cast<__int128>(b) * c + static_cast<__int128>(a) * a;
    if (det <= 0 || det >= static_cast<__int128>(kMaxRadicand))
        throw Error(Errc::InvalidArgument, "form determinant out of range");
    return {a, b, c, static_cast<Radicand>(det)};
}

std::string format_form(const BQForm& f, const std::string& y, const std::string& x) {
    std::string out = term(f.b, y + "^2", true);
    out += term(-f.c, x + "^2", false);
    if (f.a != 0) out += term(2 * f.a, x + y, false);
    return out;
}

const char* move_name(Move m) { return m == Move::X_SHIFT ? "X_SHIFT" : "Y_SHIFT"; }

BQForm apply_move(const BQForm& f, Move m) {
    const std::int64_t r = f.r();
    if (m == Move::X_SHIFT) return {f.a - f.c, r, f.c, f.radicand};
    return {f.a + f.b, f.b, -r, f.radicand};
}

BQForm SubstitutionLog::replay(const BQForm& start) const {
    BQForm f = start;
    for (Move m : moves) f = apply_move(f, m);
    return f;
}

std::pair<BigInt, BigInt> SubstitutionLog::back_substitute(const BigInt& X, const BigInt& Y) const {
    BigInt x = X, y = Y;
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        if (*it == Move::X_SHIFT) x += y;
        else y += x;
    }
    return {x, y};
}

UltimateFormReached::UltimateFormReached(const BQForm& f)
    : Error(Errc::UltimateFormReached, format_form(f) + " represents 1 at X = Y = 1"), form_(f) {}

BQForm start_form(Radicand A) {
    if (A < 2 || A >= kMaxRadicand) throw Error(Errc::InvalidArgument, "radicand out of range");
    if (is_square_u64(A)) throw Error(Errc::PerfectSquare, std::to_string(A) + " is a perfect square");
    const auto k = static_cast<std::int64_t>(isqrt_u64(A));
    const auto a = static_cast<std::int64_t>(A);
    return {-(a - k * (k + 1)), (k + 1) * (k + 1) - a, a - k * k, A};
}

ReduceStep reduce_step(const BQForm& f) {
    const std::int64_t r = f.r();
    if (r == 1) throw UltimateFormReached(f);
    if (r == 0) throw Error(Errc::InvalidArgument, "form vanishes at X = Y = 1");
    Move m = r > 1 ? Move::X_SHIFT : Move::Y_SHIFT;
    return {apply_move(f, m), m};
}

std::vector<FormClass> matching_classes(const BQForm& f) {
    std::vector<FormClass> out;
    const std::int64_t cross = f.a < 0 ? -2 * f.a : 2 * f.a;
    if (f.b == f.c) out.push_back(FormClass::I_EQUAL_SQUARES);
    if (f.a == 0) out.push_back(FormClass::IV_NO_CROSS);
    if (f.b == 2 * f.c || f.c == 2 * f.b) out.push_back(FormClass::II_DOUBLE_SQUARES);
    if (f.b + f.c == cross) out.push_back(FormClass::III_SUM_EQUALS_CROSS);
    if (f.b == cross || f.c == cross) out.push_back(FormClass::V_SQUARE_EQUALS_CROSS);
    return out;
}

std::optional<FormClass> try_classify(const BQForm& f) {
    auto m = matching_classes(f);
    if (m.empty()) return std::nullopt;
    return m.front();
}

FormClass classify(const BQForm& f) {
    if (auto c = try_classify(f)) return *c;
    throw Error(Errc::Unclassifiable, format_form(f));
}

std::uint64_t reduction_budget(Radicand A) {
    const double a = static_cast<double>(A);
    return static_cast<std::uint64_t>(4.0 * std::sqrt(a) * (std::log(a) + 1.0)) + 16;
}

Reduction reduce_full(Radicand A, std::optional<std::uint64_t> budget) {
    const std::uint64_t limit = budget.value_or(reduction_budget(A));
    Reduction red{start_form(A), {}, {}};
    BQForm f = red.start;
    while (!is_ultimate(f)) {
        if (red.log.moves.size() >= limit)
            throw Error(Errc::StepBudgetExceeded,
                        "reduction of " + std::to_string(A) + " exceeded " + std::to_string(limit) + " steps");
        ReduceStep s = reduce_step(f);
        f = s.form;
        red.log.moves.push_back(s.move);
    }
    red.final_form = f;
    return red;
}

namespace {

struct Candidate {
    DistinctiveParams params;
    PellSolution solution;
};

void offer(std::optional<Candidate>& best, const DistinctiveParams& p) {
    if (!condition_holds(p)) return;
    try {
        PellSolution s = solve_params(p);
        if (sgn(s.x) > 0 && (!best || s.x < best->solution.x)) best = Candidate{p, s};
    } catch (const Error&) {
    }
}

DistinctiveParams signed_params(FormClass cls, const BigInt& a, const BigInt& b, const BigInt& l, const BigInt& m) {
    DistinctiveParams p{cls, a, b, l, m, 1};
    if (sgn(condition_value(p)) < 0) p.sign = -1;
    return p;
}

// (u, v): magnitudes of the final-form arguments that map back to start arguments (-1, 1).
std::optional<Candidate> extract(const BQForm& f, FormClass cls, const BigInt& u, const BigInt& v) {
    std::optional<Candidate> best;
    const BigInt A = from_u64(f.radicand);
    const BigInt a = from_i64(f.a < 0 ? -f.a : f.a), b = from_i64(f.b), c = from_i64(f.c);
    const std::pair<BigInt, BigInt> pairs[] = {{u, v}, {v, u}, {1, 0}, {0, 1}};
    switch (cls) {
        case FormClass::I_EQUAL_SQUARES:
            for (const auto& [l, m] : pairs) offer(best, signed_params(cls, a, b, l, m));
            break;
        case FormClass::II_DOUBLE_SQUARES: {
            const BigInt bb = b < c ? b : c;
            for (const auto& [l, m] : pairs) offer(best, signed_params(cls, a, bb, l, m));
            break;
        }
        case FormClass::III_SUM_EQUALS_CROSS:
            // smaller square coefficient first, so ties keep the smaller representation
            for (const auto& [bb, other] : b <= c ? std::array{std::pair{b, c}, std::pair{c, b}}
                                                  : std::array{std::pair{c, b}, std::pair{b, c}}) {
                for (const BigInt& twice : {BigInt(other + 3 * bb), BigInt(3 * bb - other)}) {
                    if (sgn(twice) <= 0 || mpz_odd_p(twice.get_mpz_t())) continue;
                    const BigInt aa = twice / 2;
                    if (aa * aa - 2 * bb * bb != A) continue;
                    for (const auto& [mm, z] : pairs)
                        for (const BigInt& l : {BigInt(mm + z), BigInt(abs(BigInt(mm - z)))})
                            offer(best, signed_params(cls, aa, bb, l, mm));
                }
            }
            break;
        case FormClass::IV_NO_CROSS:
            for (const auto& [p1, p2, S, Q] : {std::tuple{b, c, v, u}, std::tuple{c, b, u, v}})
                offer(best, DistinctiveParams{cls, p1, p2, S, Q, 1});
            break;
        case FormClass::V_SQUARE_EQUALS_CROSS: {
            const BigInt cross = 2 * a;
            for (const auto& [cs, cq, S, q] : {std::tuple{b, c, v, u}, std::tuple{c, b, u, v}}) {
                if (cq != cross) continue;
                const BigInt p2 = cq / 2, p1 = 2 * cs + p2;
                if (p1 * p2 != A) continue;
                for (const BigInt& Q : {BigInt(S + 2 * q), BigInt(abs(BigInt(S - 2 * q)))})
                    offer(best, signed_params(cls, p1, p2, S, Q));
            }
            break;
        }
    }
    return best;
}

}  // namespace

InverseResult inverse_solve(Radicand A) {
    const std::uint64_t limit = reduction_budget(A);
    InverseResult res;
    BQForm f = start_form(A);
    // running product of the substitution matrices, start args = M * final args
    BigInt m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (std::uint64_t step = 0;; ++step) {
        auto classes = matching_classes(f);
        if (!classes.empty()) {
            // solve M (X, Y) = (-1, 1); det M = 1
            BigInt u = m11 + m01, v = m00 + m10;
            if (auto cand = extract(f, classes.front(), u, v)) {
                res.params = cand->params;
                res.solution = cand->solution;
                res.final_form = f;
                res.representation = representation_of(cand->params);
                res.steps = step;
                return res;
            }
        }
        if (is_ultimate(f)) throw Error(Errc::Unclassifiable, "ultimate form reached for " + std::to_string(A));
        if (step >= limit) throw Error(Errc::StepBudgetExceeded, "inverse reduction of " + std::to_string(A));
        ReduceStep s = reduce_step(f);
        if (s.move == Move::X_SHIFT) {
            m01 += m00;
            m11 += m10;
        } else {
            m00 += m01;
            m10 += m11;
        }
        f = s.form;
        res.log.moves.push_back(s.move);
    }
}

std::vector<std::string> reduction_transcript(const BQForm& from, std::uint64_t max_steps) {
    std::vector<std::string> lines;
    BQForm f = from;
    for (std::uint64_t i = 1; i <= max_steps && f.r() != 1 && f.r() != -1; ++i) {
        ReduceStep s = reduce_step(f);
        f = s.form;
        const char* sub = s.move == Move::X_SHIFT ? "X = Y + X'" : "Y = X + Y'";
        lines.push_back(std::to_string(i) + ") " + sub + "  =>  " + format_form(f));
    }
    return lines;
}

}  // namespace pell
