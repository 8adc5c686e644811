#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pell/case_solvers.hpp"
#include "pell/cf_engine.hpp"
#include "pell/errors.hpp"
#include "pell/negpell3.hpp"
#include "pell/relations.hpp"
#include "pell/scan_bench.hpp"

using namespace pell;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kMathError = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string out_path(const std::string& p) {
    const char* dir = std::getenv("PELL_OUT_DIR");
    if (!dir || p.empty() || std::filesystem::path(p).is_absolute()) return p;
    return (std::filesystem::path(dir) / p).string();
}

std::ofstream open_out(const std::string& p, bool append = false) {
    std::ofstream f(out_path(p), append ? std::ios::app : std::ios::trunc);
    if (!f) throw UsageError("cannot open " + out_path(p) + " for writing");
    return f;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            std::int64_t v = std::stoll(s);
            return {v, v};
        }
        std::int64_t lo = std::stoll(s.substr(0, pos)), hi = std::stoll(s.substr(pos + 2));
        if (lo > hi) throw UsageError("empty shift range " + s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("bad shift range " + s);
    }
}

BigInt big(const std::string& s) {
    try {
        return from_decimal(s);
    } catch (const Error&) {
        throw UsageError("not an integer: " + s);
    }
}

// ---- solve

struct SolveArgs {
    std::uint64_t A = 0;
    std::string method = "fast";
    int rhs = 1;
    std::string format = "json";
};

int cmd_solve(const SolveArgs& a) {
    if (a.A < 2) throw UsageError("A must be at least 2");
    if (a.rhs != 1 && a.rhs != -3) throw UsageError("rhs must be 1 or -3");
    PellSolution sol;
    std::string method;
    std::uint64_t steps = 0;
    if (a.rhs == 1) {
        SolveResult r = solve_with(a.A, parse_method(a.method));
        sol = r.solution;
        method = r.method;
        steps = r.steps;
    } else {
        if (a.A % 2 == 0) throw UsageError("the -3 equation is solved for odd A only");
        auto r = solve_minus3(a.A);
        if (!r) {
            std::cerr << "error: no solution of y^2 - " << a.A << " x^2 = -3\n";
            return kMathError;
        }
        sol = r->solution;
        method = r->method;
        steps = r->steps;
    }
    if (!sol.holds()) {
        std::cerr << "error: internal verification failed for A=" << a.A << '\n';
        return kMathError;
    }
    if (a.format == "tsv") {
        std::cout << "A\trhs\tx\ty\tmethod\tsteps\n"
                  << a.A << '\t' << a.rhs << '\t' << sol.x.get_str() << '\t' << sol.y.get_str() << '\t' << method
                  << '\t' << steps << '\n';
        return 0;
    }
    ojson j;
    j["A"] = a.A;
    if (a.rhs != 1) j["rhs"] = a.rhs;
    j["x"] = to_decimal(sol.x);
    j["y"] = to_decimal(sol.y);
    j["method"] = method;
    j["steps"] = steps;
    std::cout << j.dump() << '\n';
    return 0;
}

// ---- family

struct FamilyArgs {
    std::string kind;
    std::string l, m, a, b, g, g1, d, p1, p2, S, Q;
    bool odd = false;
    std::string id;
    std::vector<std::string> params;
    std::string range = "0";
    std::string shift;
};

using Params = std::vector<std::pair<std::string, std::string>>;

const std::string& need(const std::string& v, const char* name) {
    if (v.empty()) throw UsageError(std::string("missing --") + name);
    return v;
}

void emit(const FamilyRecord& r) { std::cout << to_json_line(r) << '\n'; }

bool skippable(const Error& e) {
    return e.code() == Errc::SquareTarget || e.code() == Errc::NonPositiveFactor;
}

int run_horizontal(const std::string& name, const Params& params, const SolutionFamily& f, std::int64_t lo,
                   std::int64_t hi) {
    std::uint64_t skipped = 0;
    for (std::int64_t i = lo; i <= hi; ++i) {
        try {
            ShiftResult s = shift(f, i);
            emit({name, params, i, s.A, s.x, s.y, s.solution.holds(), s.minus_one, s.minimal_seed});
        } catch (const Error& e) {
            if (!skippable(e)) throw;
            ++skipped;
        }
    }
    if (skipped) std::cerr << "skipped " << skipped << " square or non-positive targets\n";
    return 0;
}

int cmd_family(const FamilyArgs& fa) {
    auto [lo, hi] = parse_range(fa.shift.empty() ? fa.range : fa.shift);
    const std::string& k = fa.kind;
    auto horizontal = [&](FormClass cls, const BigInt& a, const BigInt& b, const BigInt& l, const BigInt& m,
                          const Params& params) {
        SolutionFamily f;
        try {
            f = make_family(cls, l, m, a, b);
        } catch (const Error& e) {
            if (e.code() == Errc::InvalidArgument) throw UsageError(e.what());
            throw;
        }
        return run_horizontal(k, params, f, lo, hi);
    };
    auto cls_of = [](const std::string& kind) {
        const std::string tail = kind.substr(1);
        return tail == "4n1" ? FormClass::I_EQUAL_SQUARES : tail == "8n3" ? FormClass::II_DOUBLE_SQUARES
                                                                        : FormClass::III_SUM_EQUALS_CROSS;
    };
    if (k == "h4n1" || k == "h8n3" || k == "h8n7") {
        BigInt l = big(need(fa.l, "l")), m = big(need(fa.m, "m")), a = big(need(fa.a, "a")), b = big(need(fa.b, "b"));
        return horizontal(cls_of(k), a, b, l, m, {{"l", fa.l}, {"m", fa.m}, {"a", fa.a}, {"b", fa.b}});
    }
    if (k == "v4n1" || k == "v8n3" || k == "v8n7") {
        const bool one = k == "v4n1";
        const std::string& gs = one ? need(fa.g, "g") : need(fa.g1, "g1");
        BigInt g = big(gs), d = big(need(fa.d, "d")), l = big(need(fa.l, "l")), m = big(need(fa.m, "m"));
        if (gcd(l, m) != 1) throw UsageError("gcd(l, m) must be 1");
        auto seed = one ? vertical_4n1(g, d, l, m) : k == "v8n3" ? vertical_8n3(g, d, l, m) : vertical_8n7(g, d, l, m);
        return horizontal(cls_of(k), seed.first, seed.second, l, m,
                          {{one ? "g" : "g1", gs}, {"d", fa.d}, {"l", fa.l}, {"m", fa.m}});
    }
    if (k == "identity") {
        FamilyParams fp;
        Params shown;
        for (const auto& kv : fa.params) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw UsageError("--param expects key=value, got " + kv);
            try {
                fp[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
            } catch (const std::logic_error&) {
                throw UsageError("bad value in " + kv);
            }
            shown.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
        }
        DistinctiveParams p;
        try {
            p = identity_family(need(fa.id, "id"), fp);
        } catch (const Error& e) {
            if (e.code() == Errc::UnknownFamily || e.code() == Errc::InvalidArgument) throw UsageError(e.what());
            throw;
        }
        shown.insert(shown.begin(), {"id", fa.id});
        SolutionFamily f = make_family(p.cls, p.l, p.m, p.a, p.b);
        return run_horizontal(k, shown, f, lo, hi);
    }
    if (k == "hcomp" || k == "vcomp") {
        BigInt p01, p02, S = big(need(fa.S, "S")), Q = big(need(fa.Q, "Q"));
        Params shown;
        if (k == "hcomp") {
            p01 = big(need(fa.p1, "p1"));
            p02 = big(need(fa.p2, "p2"));
            shown = {{"p1", fa.p1}, {"p2", fa.p2}, {"S", fa.S}, {"Q", fa.Q}};
        } else {
            BigInt l = big(need(fa.l, "l")), m = big(need(fa.m, "m"));
            std::tie(p01, p02) = vertical_composite(l, m, Q, S, fa.odd);
            shown = {{"l", fa.l}, {"m", fa.m}, {"S", fa.S}, {"Q", fa.Q}};
        }
        shown.emplace_back("parity", fa.odd ? "odd" : "even");
        CompositeFamily f = make_composite(fa.odd, p01, p02, S, Q);
        std::uint64_t skipped = 0;
        for (std::int64_t i = lo; i <= hi; ++i) {
            try {
                CompositeShift s = shift_composite(f, i);
                emit({k, shown, i, s.A, s.x, s.y, s.solution.holds(), i == -1, std::nullopt});
            } catch (const Error& e) {
                if (!skippable(e)) throw;
                ++skipped;
            }
        }
        if (skipped) std::cerr << "skipped " << skipped << " square or non-positive targets\n";
        return 0;
    }
    if (k == "hm3" || k == "vm3") {
        BigInt l = big(need(fa.l, "l")), m = big(need(fa.m, "m"));
        if (gcd(l, m) != 1) throw UsageError("gcd(l, m) must be 1");
        Minus3Params seed{0, 0, l, m, 1, false};
        Params shown;
        if (k == "hm3") {
            seed.a = big(need(fa.a, "a"));
            seed.b = big(need(fa.b, "b"));
            shown = {{"l", fa.l}, {"m", fa.m}, {"a", fa.a}, {"b", fa.b}};
        } else {
            std::tie(seed.a, seed.b) = vertical_minus3(big(need(fa.g, "g")), big(need(fa.d, "d")), l, m);
            shown = {{"g", fa.g}, {"d", fa.d}, {"l", fa.l}, {"m", fa.m}};
        }
        std::uint64_t skipped = 0;
        for (std::int64_t i = lo; i <= hi; ++i) {
            try {
                Minus3Shift s = shift_minus3(seed, i);
                emit({k, shown, i, s.A, s.x, s.y, s.solution.holds(), i == -1, std::nullopt});
                if (s.reduced) emit({k + "/4", shown, i, s.reduced->A, s.reduced->x, s.reduced->y,
                                     s.reduced->holds(), i == -1, std::nullopt});
            } catch (const Error& e) {
                if (!skippable(e)) throw;
                ++skipped;
            }
        }
        if (skipped) std::cerr << "skipped " << skipped << " square targets\n";
        return 0;
    }
    throw UsageError("unknown family kind " + k);
}

// ---- scan / bench

struct RangeArgs {
    std::uint64_t lo = 0, hi = 0;
    std::string method = "fast";
    std::string out, tsv;
    bool maxima = false;
    bool seqdiff = false;
    unsigned threads = 0;
};

void check_range(const RangeArgs& r) {
    if (r.lo < 2) throw UsageError("range must start at 2 or above");
    if (r.lo > r.hi) throw UsageError("empty range [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
}

int cmd_scan(const RangeArgs& r) {
    check_range(r);
    SolveMethod m = parse_method(r.method);
    auto table = build_table(r.lo, r.hi, m, r.threads);
    if (!r.out.empty()) {
        auto f = open_out(r.out, true);
        write_jsonl(f, table);
    }
    if (!r.tsv.empty()) {
        auto f = open_out(r.tsv);
        write_tsv(f, table);
    }
    std::cout << "scanned [" << r.lo << ", " << r.hi << "]: " << table.size() << " radicands\n";
    if (!r.maxima) return 0;
    // maxima need whole intervals; widen to the covering ones
    const std::uint64_t klo = isqrt_u64(r.lo), khi = isqrt_u64(r.hi);
    const std::uint64_t wlo = klo * klo + 1, whi = (khi + 1) * (khi + 1) - 1;
    if (wlo != r.lo || whi != r.hi) table = build_table(wlo, whi, m, r.threads);
    MaximaReport rep = find_maxima(table);
    std::cout << "maxima over [" << wlo << ", " << whi << "]\n";
    for (const auto& mr : rep.records) {
        ojson j;
        j["A"] = mr.A;
        j["x"] = to_decimal(mr.x);
        j["k"] = mr.k;
        j["kind"] = maxima_kind_name(mr.kind);
        j["class"] = aclass_name(mr.classification);
        std::cout << j.dump() << '\n';
    }
    std::cout << "summary " << ojson(rep.summary).dump() << '\n';
    return 0;
}

int cmd_bench(const RangeArgs& r) {
    check_range(r);
    BenchReport rep = bench(r.lo, r.hi, {r.threads, r.seqdiff});
    std::cout << summary_table(rep);
    if (!r.out.empty()) {
        auto f = open_out(r.out);
        f << to_json(rep) << '\n';
    }
    return 0;
}

// CLI11 reads "-3..3" as a flag; glue such values to their option.
std::vector<std::string> normalize(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string s = argv[i];
        if ((s == "--i" || s == "--shift" || s == "--rhs") && i + 1 < argc) {
            out.push_back(s + "=" + argv[++i]);
            continue;
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pell equation solver: y^2 - A x^2 = 1 and y^2 - A x^2 = -3"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "minimal solution for one radicand");
    solve->add_option("A", sa.A, "radicand")->required();
    solve->add_option("--method", sa.method, "fast | standard | seqdiff")
        ->check(CLI::IsMember({"fast", "standard", "seqdiff"}));
    solve->add_option("--rhs", sa.rhs, "right side, 1 or -3");
    solve->add_option("--format", sa.format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));

    FamilyArgs fa;
    auto* family = app.add_subcommand("family", "generate a verified solution family");
    family->add_option("kind", fa.kind, "h4n1 h8n3 h8n7 v4n1 v8n3 v8n7 identity hcomp vcomp hm3 vm3")->required();
    for (auto [name, ref] : std::vector<std::pair<const char*, std::string*>>{
             {"--l", &fa.l}, {"--m", &fa.m}, {"--a", &fa.a}, {"--b", &fa.b}, {"--g", &fa.g}, {"--g1", &fa.g1},
             {"--d", &fa.d}, {"--p1", &fa.p1}, {"--p2", &fa.p2}, {"--S", &fa.S}, {"--Q", &fa.Q}, {"--id", &fa.id}})
        family->add_option(name, *ref);
    family->add_option("--param", fa.params, "identity family parameter key=value");
    family->add_flag("--odd", fa.odd, "odd composite case");
    family->add_option("--i", fa.range, "shift range LO..HI");
    family->add_option("--shift", fa.shift, "single shift");

    RangeArgs scan_args, bench_args;
    auto* scan = app.add_subcommand("scan", "solution table over a range");
    scan->add_option("lo", scan_args.lo)->required();
    scan->add_option("hi", scan_args.hi)->required();
    scan->add_option("--method", scan_args.method)->check(CLI::IsMember({"fast", "standard", "seqdiff"}));
    scan->add_option("--out", scan_args.out, "append JSON lines here");
    scan->add_option("--tsv", scan_args.tsv, "write a TSV export here");
    scan->add_flag("--maxima", scan_args.maxima, "report local and absolute maxima");
    scan->add_option("--threads", scan_args.threads);

    auto* benchc = app.add_subcommand("bench", "standard vs shortcut benchmark");
    benchc->add_option("lo", bench_args.lo)->required();
    benchc->add_option("hi", bench_args.hi)->required();
    benchc->add_option("--out", bench_args.out, "write the JSON report here");
    benchc->add_flag("--seqdiff", bench_args.seqdiff, "also count unclassifiable radicands");
    benchc->add_option("--threads", bench_args.threads);

    auto args = normalize(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve) return cmd_solve(sa);
        if (*family) return cmd_family(fa);
        if (*scan) return cmd_scan(scan_args);
        if (*benchc) return cmd_bench(bench_args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        if (e.code() == Errc::InvalidArgument) {
            std::cerr << "usage error: " << e.what() << '\n';
            return kUsage;
        }
        std::cerr << "error: " << e.what() << '\n';
        return kMathError;
    }
    return kUsage;
}
