#include "pell/bigint.hpp"

#include <cmath>

#include "pell/errors.hpp"

namespace pell {

BigInt from_u64(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

BigInt from_i64(std::int64_t v) {
    if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
    // magnitude of INT64_MIN does not fit in int64_t
    BigInt r = from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1u);
    return -r;
}

bool fits_u64(const BigInt& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& v) {
    if (!fits_u64(v)) throw Error(Errc::InvalidArgument, "value does not fit in 64 bits: " + v.get_str());
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, -1, sizeof out, 0, 0, v.get_mpz_t());
    return count == 0 ? 0 : out;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt from_decimal(const std::string& s) {
    BigInt r;
    if (s.empty() || r.set_str(s, 10) != 0) throw Error(Errc::InvalidArgument, "not a decimal integer: " + s);
    return r;
}

BigInt isqrt(const BigInt& n) {
    if (sgn(n) < 0) throw Error(Errc::InvalidArgument, "isqrt of negative value");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const BigInt& n, BigInt* root) {
    if (sgn(n) < 0) return false;
    BigInt r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (root) *root = r;
    return sgn(rem) == 0;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && (r > UINT32_MAX || r * r > n)) --r;
    while (r + 1 <= UINT32_MAX && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square_u64(std::uint64_t n) {
    auto r = isqrt_u64(n);
    return r * r == n;
}

}  // namespace pell
