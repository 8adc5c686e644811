#include "pell/oracle.hpp"

#include <array>
#include <cmath>

#include "pell/errors.hpp"

namespace pell::oracle {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

template <unsigned M>
constexpr std::array<bool, M> square_residues() {
    std::array<bool, M> t{};
    for (unsigned i = 0; i < M; ++i) t[(i * i) % M] = true;
    return t;
}

constexpr auto kRes64 = square_residues<64>();
constexpr auto kRes63 = square_residues<63>();
constexpr auto kRes65 = square_residues<65>();
constexpr auto kRes11 = square_residues<11>();

u128 isqrt128(u128 n) {
    if (n == 0) return 0;
    auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

template <class T>
bool square_test(T v, T& root) {
    if (!kRes64[static_cast<unsigned>(v & 63)]) return false;
    if (!kRes63[static_cast<unsigned>(v % 63)]) return false;
    if (!kRes65[static_cast<unsigned>(v % 65)]) return false;
    if (!kRes11[static_cast<unsigned>(v % 11)]) return false;
    T r;
    if constexpr (sizeof(T) == 8) r = static_cast<T>(isqrt(static_cast<u64>(v)));
    else r = isqrt128(v);
    if (r * r != v) return false;
    root = r;
    return true;
}

BigInt big(u128 v) {
    BigInt hi = BigInt(static_cast<unsigned long>(static_cast<u64>(v >> 64)));
    BigInt lo = BigInt(static_cast<unsigned long>(static_cast<u64>(v)));
    return (hi << 64) + lo;
}

// x in [lo, hi] with A x^2 + rhs >= 0 for every x >= lo; T must hold A hi^2 + |rhs|.
template <class T>
std::optional<std::pair<u64, BigInt>> scan(u64 A, std::int64_t rhs, u64 lo, u64 hi) {
    T a = A;
    T v = a * lo * lo;
    v = rhs >= 0 ? v + static_cast<T>(rhs) : v - static_cast<T>(-rhs);
    for (u64 x = lo; x <= hi; ++x) {
        T root;
        if (square_test(v, root)) return std::pair{x, big(static_cast<u128>(root))};
        v += a * (2 * static_cast<T>(x) + 1);
    }
    return std::nullopt;
}

std::optional<std::pair<u64, BigInt>> scan_big(u64 A, std::int64_t rhs, u64 lo, u64 hi) {
    BigInt a = BigInt(static_cast<unsigned long>(A));
    for (u64 x = lo; x <= hi; ++x) {
        BigInt X = BigInt(static_cast<unsigned long>(x));
        BigInt v = a * X * X + BigInt(static_cast<long>(rhs));
        BigInt r, rem;
        mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
        if (sgn(rem) == 0) return std::pair{x, r};
    }
    return std::nullopt;
}

std::optional<PellSolution> search(u64 A, std::int64_t rhs, u64 bound) {
    if (bound == 0) return std::nullopt;
    u64 lo = 1;
    if (rhs < 0) {
        // first x with A x^2 >= -rhs
        while (lo <= bound && static_cast<u128>(A) * lo * lo < static_cast<u128>(-rhs)) ++lo;
        if (lo > bound) return std::nullopt;
    }
    const long double top = static_cast<long double>(A) * bound * bound + std::fabs(static_cast<long double>(rhs));
    std::optional<std::pair<u64, BigInt>> hit;
    if (top < 1.8e19L) hit = scan<u64>(A, rhs, lo, bound);
    else if (top < 8.0e37L) hit = scan<u128>(A, rhs, lo, bound);
    else hit = scan_big(A, rhs, lo, bound);
    if (!hit) return std::nullopt;
    BigInt Ab = BigInt(static_cast<unsigned long>(A));
    PellSolution s{Ab, BigInt(static_cast<unsigned long>(hit->first)), hit->second, static_cast<int>(rhs)};
    if (!s.holds()) throw Error(Errc::ConditionViolated, "oracle produced a non-solution");
    return s;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0xFFFFFFFFull || (r > 0 && r * r > n)) --r;
    while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

BigInt isqrt(const BigInt& n) {
    if (sgn(n) < 0) throw Error(Errc::InvalidArgument, "isqrt of negative value");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<PellSolution> brute_force_pell(std::uint64_t A, std::uint64_t x_bound) {
    const u64 r = isqrt(A);
    if (r * r == A) throw Error(Errc::PerfectSquare, std::to_string(A) + " is a perfect square");
    return search(A, 1, x_bound);
}

std::optional<PellSolution> brute_force_rhs(std::uint64_t A, std::int64_t rhs, std::uint64_t x_bound) {
    if (rhs < -(1ll << 40) || rhs > (1ll << 40)) throw Error(Errc::InvalidArgument, "rhs out of range");
    return search(A, rhs, x_bound);
}

PellSolution compose(const PellSolution& s1, const PellSolution& s2, int sign) {
    if (s1.A != s2.A) throw Error(Errc::MixedRadicand, s1.A.get_str() + " vs " + s2.A.get_str());
    if (sign != 1 && sign != -1) throw Error(Errc::InvalidArgument, "sign must be +-1");
    BigInt y = s1.y * s2.y + sign * s1.A * s1.x * s2.x;
    BigInt x = s1.y * s2.x + sign * s1.x * s2.y;
    PellSolution out{s1.A, abs(x), abs(y), s1.rhs * s2.rhs};
    if (!out.holds()) throw Error(Errc::ConditionViolated, "composition broke the identity");
    return out;
}

std::optional<Representation> decompose_brute(std::uint64_t A, RepKind kind) {
    auto sq = [](u64 v, u64& root) {
        root = isqrt(v);
        return root * root == v;
    };
    u64 b = 0;
    switch (kind) {
        case RepKind::SUM_SQ:
        case RepKind::SUM_2SQ:
        case RepKind::SUM_3SQ: {
            const u64 k = kind == RepKind::SUM_SQ ? 1 : kind == RepKind::SUM_2SQ ? 2 : 3;
            for (u64 a = 0; a * a <= A; ++a) {
                u64 rest = A - a * a;
                if (rest == 0 || rest % k) continue;
                if (sq(rest / k, b)) return Representation{kind, a, b};
            }
            return std::nullopt;
        }
        case RepKind::DIFF_2SQ:
            for (u64 a = isqrt(A); a * a <= 2 * A; ++a) {
                if (a * a < A || (a * a - A) % 2) continue;
                if (sq((a * a - A) / 2, b)) return Representation{kind, a, b};
            }
            return std::nullopt;
        case RepKind::COPRIME_FACTORS:
            for (u64 p2 = 2; p2 * p2 <= A; ++p2) {
                if (A % p2) continue;
                u64 p1 = A / p2, x = p1, y = p2;
                while (y) {
                    u64 t = x % y;
                    x = y;
                    y = t;
                }
                if (x == 1) return Representation{kind, p1, p2};
            }
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace pell::oracle
