#include "pell/scan_bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pell/errors.hpp"
#include "pell/form_reduction.hpp"
#include "pell/primality.hpp"

namespace pell {

SolveMethod parse_method(const std::string& s) {
    if (s == "fast") return SolveMethod::FAST;
    if (s == "standard") return SolveMethod::STANDARD;
    if (s == "seqdiff") return SolveMethod::SEQDIFF;
    throw Error(Errc::InvalidArgument, "unknown method " + s);
}

const char* method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::FAST: return "fast";
        case SolveMethod::STANDARD: return "standard";
        case SolveMethod::SEQDIFF: return "seqdiff";
    }
    return "?";
}

SolveResult solve_with(Radicand A, SolveMethod m) {
    switch (m) {
        case SolveMethod::FAST: return solve_fast(A);
        case SolveMethod::STANDARD: return solve_standard_traced(A);
        case SolveMethod::SEQDIFF:
            try {
                InverseResult r = inverse_solve(A);
                return {r.solution, std::string("SEQDIFF_") + class_name(r.params.cls), r.steps, std::nullopt};
            } catch (const Error& e) {
                if (e.code() != Errc::Unclassifiable && e.code() != Errc::StepBudgetExceeded) throw;
                SolveResult r = solve_fast(A);
                r.method = "SEQDIFF_FALLBACK_" + r.method;
                return r;
            }
    }
    throw Error(Errc::InvalidArgument, "unknown method");
}

void for_blocks(std::uint64_t lo, std::uint64_t hi, unsigned threads,
                const std::function<void(std::uint64_t, std::uint64_t)>& f) {
    if (lo > hi) return;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t n = hi - lo + 1;
    const std::uint64_t blocks = std::min<std::uint64_t>(n, threads * 4ull);
    const std::uint64_t size = (n + blocks - 1) / blocks;
    if (threads == 1) {
        for (std::uint64_t s = lo; s <= hi; s += size) f(s, std::min(hi, s + size - 1));
        return;
    }
    std::mutex mu;
    std::uint64_t next = lo;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            std::uint64_t s;
            {
                std::lock_guard<std::mutex> g(mu);
                if (next > hi || failure) return;
                s = next;
                next = s + size > hi ? hi + 1 : s + size;
            }
            try {
                f(s, std::min(hi, s + size - 1));
            } catch (...) {
                std::lock_guard<std::mutex> g(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

void check_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2) throw Error(Errc::InvalidArgument, "range must start at 2 or above");
    if (lo > hi) throw Error(Errc::InvalidArgument, "empty range");
}

// results[A - lo] for every A in range; squares left empty
template <class T, class F>
std::vector<std::optional<T>> run_range(std::uint64_t lo, std::uint64_t hi, unsigned threads, F fn) {
    std::vector<std::optional<T>> out(hi - lo + 1);
    for_blocks(lo, hi, threads, [&](std::uint64_t s, std::uint64_t e) {
        for (std::uint64_t A = s; A <= e; ++A)
            if (!is_square_u64(A)) out[A - lo] = fn(A);
    });
    return out;
}

}  // namespace

std::vector<TableRecord> build_table(std::uint64_t lo, std::uint64_t hi, SolveMethod m, unsigned threads) {
    check_range(lo, hi);
    auto rows = run_range<TableRecord>(lo, hi, threads, [m](std::uint64_t A) {
        SolveResult r = solve_with(A, m);
        if (!r.solution.holds()) throw Error(Errc::ConditionViolated, "unverified solution for " + std::to_string(A));
        return TableRecord{A, r.solution.x, r.solution.y, r.method, r.steps};
    });
    std::vector<TableRecord> out;
    for (auto& r : rows)
        if (r) out.push_back(std::move(*r));
    return out;
}

std::string to_json_line(const TableRecord& r) {
    nlohmann::ordered_json j;
    j["A"] = r.A;
    j["x"] = to_decimal(r.x);
    j["y"] = to_decimal(r.y);
    j["method"] = r.method;
    return j.dump();
}

void write_jsonl(std::ostream& os, const std::vector<TableRecord>& t) {
    for (const auto& r : t) os << to_json_line(r) << '\n';
}

void write_tsv(std::ostream& os, const std::vector<TableRecord>& t) {
    os << "A\tx\ty\tmethod\n";
    for (const auto& r : t) os << r.A << '\t' << r.x.get_str() << '\t' << r.y.get_str() << '\t' << r.method << '\n';
}

const char* maxima_kind_name(MaximaKind k) { return k == MaximaKind::LOCAL ? "local" : "absolute"; }

const char* aclass_name(AClass c) {
    switch (c) {
        case AClass::PRIME_4N1: return "prime_4n1";
        case AClass::PRIME: return "prime";
        case AClass::QUASIPRIME: return "quasiprime";
        case AClass::OTHER: return "other";
    }
    return "?";
}

AClass classify_value(std::uint64_t A) {
    if (is_prime(A)) return A % 4 == 1 ? AClass::PRIME_4N1 : AClass::PRIME;
    if (A % 2 == 0 && A / 2 > 2 && is_prime(A / 2)) return AClass::QUASIPRIME;
    return AClass::OTHER;
}

MaximaReport find_maxima(const std::vector<TableRecord>& table) {
    MaximaReport rep;
    if (table.empty()) return rep;
    const std::uint64_t lo = table.front().A, hi = table.back().A;
    const std::uint64_t klo = isqrt_u64(lo), khi = isqrt_u64(hi);
    if (lo != klo * klo + 1) throw Error(Errc::IncompleteInterval, "table starts inside interval k=" + std::to_string(klo));
    if (hi != (khi + 1) * (khi + 1) - 1)
        throw Error(Errc::IncompleteInterval, "table ends inside interval k=" + std::to_string(khi));
    std::uint64_t expect = lo;
    for (const auto& r : table) {
        while (is_square_u64(expect)) ++expect;
        if (r.A != expect) throw Error(Errc::IncompleteInterval, "missing or unordered A near " + std::to_string(expect));
        ++expect;
    }

    const BigInt* best_abs = nullptr;
    std::size_t i = 0;
    while (i < table.size()) {
        const std::uint64_t k = isqrt_u64(table[i].A);
        std::size_t j = i, arg = i;
        for (; j < table.size() && isqrt_u64(table[j].A) == k; ++j)
            if (table[j].x > table[arg].x) arg = j;
        rep.records.push_back({table[arg].A, table[arg].x, k, MaximaKind::LOCAL, classify_value(table[arg].A)});
        for (std::size_t p = i; p < j; ++p) {
            if (!best_abs || table[p].x > *best_abs) {
                best_abs = &table[p].x;
                rep.records.push_back(
                    {table[p].A, table[p].x, k, MaximaKind::ABSOLUTE, classify_value(table[p].A)});
            }
        }
        i = j;
    }
    std::stable_sort(rep.records.begin(), rep.records.end(),
                     [](const MaximaRecord& a, const MaximaRecord& b) { return a.A < b.A; });
    for (const auto& r : rep.records) rep.summary[maxima_kind_name(r.kind)][aclass_name(r.classification)]++;
    return rep;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BenchReport bench(std::uint64_t lo, std::uint64_t hi, const BenchOptions& opt) {
    check_range(lo, hi);
    BenchReport rep;
    rep.lo = lo;
    rep.hi = hi;

    auto t0 = std::chrono::steady_clock::now();
    auto std_rows = run_range<SolveResult>(lo, hi, opt.threads, [](std::uint64_t A) { return solve_standard_traced(A); });
    rep.standard.wall_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto fast_rows = run_range<SolveResult>(lo, hi, opt.threads, [](std::uint64_t A) { return solve_fast(A); });
    rep.fast.wall_seconds = seconds_since(t0);

    for (std::uint64_t A = lo; A <= hi; ++A) {
        const auto& s = std_rows[A - lo];
        const auto& f = fast_rows[A - lo];
        if (!s) continue;
        if (!(s->solution == f->solution))
            throw Error(Errc::MismatchDetected, "A=" + std::to_string(A) + " standard x=" + s->solution.x.get_str() +
                                                    " fast x=" + f->solution.x.get_str() + " via " + f->method);
        ++rep.count;
        rep.standard.steps += s->steps;
        rep.fast.steps += f->steps;
        if (f->method == "STANDARD_FALLBACK") ++rep.fallback;
        else ++rep.hits[f->method];
    }
    rep.wall_ratio = rep.fast.wall_seconds > 0 ? rep.standard.wall_seconds / rep.fast.wall_seconds : 0;
    rep.step_ratio = rep.standard.steps ? static_cast<double>(rep.fast.steps) / rep.standard.steps : 0;

    if (opt.include_seqdiff) {
        auto seq = run_range<bool>(lo, hi, opt.threads, [](std::uint64_t A) {
            try {
                inverse_solve(A);
                return true;
            } catch (const Error& e) {
                if (e.code() == Errc::Unclassifiable || e.code() == Errc::StepBudgetExceeded) return false;
                throw;
            }
        });
        std::uint64_t miss = 0;
        for (const auto& v : seq)
            if (v && !*v) ++miss;
        rep.seqdiff_unclassified = miss;
    }

    const unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    rep.environment["compiler"] = __VERSION__;
    rep.environment["threads"] = std::to_string(threads);
    rep.environment["hardware_concurrency"] = std::to_string(std::thread::hardware_concurrency());
#ifdef NDEBUG
    rep.environment["assertions"] = "off";
#else
    rep.environment["assertions"] = "on";
#endif
    return rep;
}

std::string to_json(const BenchReport& r) {
    nlohmann::ordered_json j;
    j["range"] = {r.lo, r.hi};
    j["count"] = r.count;
    j["standard"] = {{"wall_seconds", r.standard.wall_seconds}, {"steps", r.standard.steps}};
    j["fast"] = {{"wall_seconds", r.fast.wall_seconds}, {"steps", r.fast.steps}};
    j["hits"] = r.hits;
    j["fallback"] = r.fallback;
    j["wall_ratio"] = r.wall_ratio;
    j["step_ratio"] = r.step_ratio;
    j["mismatches"] = 0;
    if (r.seqdiff_unclassified) j["seqdiff_unclassified"] = *r.seqdiff_unclassified;
    j["environment"] = r.environment;
    return j.dump(2);
}

std::string summary_table(const BenchReport& r) {
    std::ostringstream os;
    char line[160];
    os << "range [" << r.lo << ", " << r.hi << "], " << r.count << " radicands, 0 mismatches\n";
    std::snprintf(line, sizeof line, "%-10s %14s %14s\n", "method", "wall_s", "cf_steps");
    os << line;
    std::snprintf(line, sizeof line, "%-10s %14.3f %14llu\n", "standard", r.standard.wall_seconds,
                  static_cast<unsigned long long>(r.standard.steps));
    os << line;
    std::snprintf(line, sizeof line, "%-10s %14.3f %14llu\n", "fast", r.fast.wall_seconds,
                  static_cast<unsigned long long>(r.fast.steps));
    os << line;
    std::snprintf(line, sizeof line, "wall ratio (standard/fast) %.3f, step ratio (fast/standard) %.3f\n", r.wall_ratio,
                  r.step_ratio);
    os << line;
    os << "hits:";
    for (const auto& [k, v] : r.hits) os << ' ' << k << '=' << v;
    os << " fallback=" << r.fallback << '\n';
    if (r.seqdiff_unclassified) os << "seqdiff unclassified: " << *r.seqdiff_unclassified << '\n';
    return os.str();
}

}  // namespace pell
