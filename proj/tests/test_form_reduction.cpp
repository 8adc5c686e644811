#include <doctest.h>

#include <fstream>
#include <random>
#include <string>

#include "pell/case_solvers.hpp"
#include "pell/cf_engine.hpp"
#include "pell/errors.hpp"
#include "pell/form_reduction.hpp"

using namespace pell;

namespace {

// value b Y^2 - c X^2 + 2a XY
BigInt eval(const BQForm& f, const BigInt& X, const BigInt& Y) {
    return BigInt(from_i64(f.b)) * Y * Y - BigInt(from_i64(f.c)) * X * X + 2 * BigInt(from_i64(f.a)) * X * Y;
}

}  // namespace

TEST_SUITE("form_reduction") {
    TEST_CASE("start form and moves") {
        BQForm f = start_form(61);
        CHECK(f.radicand == 61);
        CHECK(f.b * f.c + f.a * f.a == 61);
        CHECK_THROWS_AS(start_form(49), Error);
        BQForm g = make_form(-6, 5, 5);
        CHECK(format_form(g) == "5Y^2 - 5X^2 - 12XY");
        CHECK(g.r() == -12);
        BQForm h = apply_move(g, Move::Y_SHIFT);
        CHECK(h == make_form(-1, 5, 12));
        CHECK_THROWS_AS(make_form(0, 0, 0), Error);
        CHECK_THROWS_AS(reduce_step(make_form(0, 2, 1)), UltimateFormReached);
    }

    TEST_CASE("golden transcript") {
        std::ifstream in(std::string(PELL_GOLDEN_DIR) + "/transcript_61.txt");
        REQUIRE(in);
        std::vector<std::string> expected;
        for (std::string line; std::getline(in, line);) expected.push_back(line);
        auto got = reduction_transcript(make_form(-6, 5, 5));
        CHECK(got.size() == 10);
        CHECK(got == expected);

        SubstitutionLog log;
        BQForm f = make_form(-6, 5, 5);
        for (int i = 0; i < 10; ++i) {
            ReduceStep s = reduce_step(f);
            log.moves.push_back(s.move);
            f = s.form;
        }
        CHECK(log.replay(make_form(-6, 5, 5)) == f);
        auto [X, Y] = log.back_substitute(1, 1);
        CHECK(X == 21);
        CHECK(Y == 58);
    }

    TEST_CASE("classification") {
        CHECK(classify(make_form(2, 3, 3)) == FormClass::I_EQUAL_SQUARES);
        CHECK(classify(make_form(0, 2, 3)) == FormClass::IV_NO_CROSS);
        CHECK(try_classify(make_form(1, 3, 7)) == std::nullopt);
        CHECK_THROWS_AS(classify(make_form(1, 3, 7)), Error);
    }

    TEST_CASE("inverse solve worked examples") {
        InverseResult r = inverse_solve(61);
        CHECK(r.params.cls == FormClass::I_EQUAL_SQUARES);
        CHECK(r.params.a == 6);
        CHECK(r.params.b == 5);
        CHECK(r.params.l == 58);
        CHECK(r.params.m == 21);
        CHECK(r.steps == 10);
        CHECK(r.solution.x == 226153980);

        r = inverse_solve(103);
        CHECK(r.params.cls == FormClass::III_SUM_EQUALS_CROSS);
        CHECK(r.params.a == 11);
        CHECK(r.params.b == 3);
        CHECK(r.params.l == 7);
        CHECK(r.params.m == 1);
        CHECK(r.solution.x == 22419);
        CHECK(format_form(r.final_form) == "13Y^2 - 3X^2 - 16XY");

        r = inverse_solve(13);
        CHECK(r.solution.x == 180);
        CHECK(r.representation.value() == 13);
    }

    TEST_CASE("inverse solve matches the CF solver up to 20000") {
        std::uint64_t unclassified = 0;
        for (std::uint64_t A = 2; A <= 20000; ++A) {
            if (is_square_u64(A)) continue;
            try {
                InverseResult r = inverse_solve(A);
                REQUIRE(r.solution == solve_standard(A));
                REQUIRE(condition_holds(r.params));
                REQUIRE(r.log.replay(start_form(A)) == r.final_form);
            } catch (const Error& e) {
                REQUIRE(e.code() == Errc::Unclassifiable);
                ++unclassified;
            }
        }
        CHECK(unclassified == 0);
    }

    TEST_CASE("determinant invariance and value preservation") {
        std::mt19937_64 rng(5);
        for (int n = 0; n < 1000; ++n) {
            std::uint64_t A;
            do A = 2 + rng() % 99998;
            while (is_square_u64(A));
            BQForm f = start_form(A);
            SubstitutionLog log;
            while (!is_ultimate(f)) {
                ReduceStep s = reduce_step(f);
                f = s.form;
                log.moves.push_back(s.move);
                REQUIRE(f.b * f.c + f.a * f.a == static_cast<std::int64_t>(A));
            }
            const BigInt X = 1 + rng() % 50, Y = 1 + rng() % 50;
            auto [x0, y0] = log.back_substitute(X, Y);
            REQUIRE(eval(start_form(A), x0, y0) == eval(f, X, Y));
        }
    }

    TEST_CASE("termination budget") {
        std::uint64_t over_20 = 0;
        for (std::uint64_t A = 2; A <= 100000; ++A) {
            if (is_square_u64(A)) continue;
            Reduction red = reduce_full(A);
            REQUIRE(is_ultimate(red.final_form));
            if (static_cast<double>(red.log.moves.size()) > 20.0 * std::sqrt(static_cast<double>(A))) ++over_20;
        }
        // the 20 sqrt(A) bound does not hold; frozen count of exceptions
        CHECK(over_20 == 545);
        try {
            reduce_full(61, 2);
            FAIL("expected budget error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::StepBudgetExceeded);
        }
    }
}
