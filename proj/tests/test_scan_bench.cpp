#include <doctest.h>

#include <sstream>

#include "pell/errors.hpp"
#include "pell/primality.hpp"
#include "pell/scan_bench.hpp"

using namespace pell;

TEST_SUITE("scan_bench") {
    TEST_CASE("table records") {
        auto t = build_table(2, 10, SolveMethod::STANDARD, 2);
        REQUIRE(t.size() == 7);
        const std::uint64_t As[] = {2, 3, 5, 6, 7, 8, 10};
        const int xs[] = {2, 1, 4, 2, 3, 1, 6};
        for (int i = 0; i < 7; ++i) {
            CHECK(t[i].A == As[i]);
            CHECK(t[i].x == xs[i]);
        }
        auto one = build_table(61, 61, SolveMethod::FAST);
        CHECK(to_json_line(one.at(0)) == R"({"A":61,"x":"226153980","y":"1766319049","method":"EQUAL_R"})");
        CHECK(build_table(97, 97, SolveMethod::SEQDIFF).at(0).x == 6377352);
        std::ostringstream tsv;
        write_tsv(tsv, one);
        CHECK(tsv.str().find("61\t226153980\t1766319049") != std::string::npos);
    }

    TEST_CASE("parallel table is deterministic") {
        auto a = build_table(2, 3000, SolveMethod::FAST, 1);
        auto b = build_table(2, 3000, SolveMethod::FAST, 4);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            REQUIRE(a[i].A == b[i].A);
            REQUIRE(a[i].x == b[i].x);
            REQUIRE(a[i].method == b[i].method);
        }
    }

    TEST_CASE("solve_with tags") {
        CHECK(solve_with(61, SolveMethod::STANDARD).method == "STANDARD");
        CHECK(solve_with(103, SolveMethod::SEQDIFF).method == "SEQDIFF_III");
        CHECK(parse_method("seqdiff") == SolveMethod::SEQDIFF);
        CHECK_THROWS_AS(parse_method("slow"), Error);
    }

    TEST_CASE("maxima") {
        auto t = build_table(50, 63, SolveMethod::FAST);
        MaximaReport rep = find_maxima(t);
        bool found = false;
        for (const auto& r : rep.records)
            if (r.kind == MaximaKind::LOCAL && r.k == 7) found = r.A == 61;
        CHECK(found);
        t = build_table(5, 8, SolveMethod::FAST);
        rep = find_maxima(t);
        REQUIRE(!rep.records.empty());
        CHECK(rep.records[0].A == 5);
        CHECK_THROWS_AS(find_maxima(build_table(50, 60, SolveMethod::FAST)), Error);

        t = build_table(2, 168, SolveMethod::FAST);
        rep = find_maxima(t);
        std::vector<std::uint64_t> abs;
        for (const auto& r : rep.records)
            if (r.kind == MaximaKind::ABSOLUTE) abs.push_back(r.A);
        CHECK(abs == std::vector<std::uint64_t>{2, 5, 10, 13, 29, 46, 53, 61, 109});
        CHECK(classify_value(61) == AClass::PRIME_4N1);
        CHECK(classify_value(22) == AClass::QUASIPRIME);
        CHECK(classify_value(7) == AClass::PRIME);
        CHECK(classify_value(21) == AClass::OTHER);
    }

    TEST_CASE("bench on a small range") {
        BenchReport r = bench(2, 100);
        CHECK(r.count == 90);
        CHECK(r.fast.steps <= r.standard.steps);
        CHECK(r.step_ratio < 1.0);
        CHECK(r.wall_ratio > 0);
        BenchReport one = bench(61, 61);
        CHECK(one.fast.steps == 6);
        CHECK(one.standard.steps == 12);
        CHECK(to_json(one).find("\"step_ratio\"") != std::string::npos);
    }
}
