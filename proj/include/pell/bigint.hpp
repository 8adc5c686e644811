#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pell {

using BigInt = mpz_class;

BigInt from_u64(std::uint64_t v);
BigInt from_i64(std::int64_t v);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);  // throws InvalidArgument when out of range
std::string to_decimal(const BigInt& v);
BigInt from_decimal(const std::string& s);

BigInt isqrt(const BigInt& n);           // floor sqrt of n >= 0
bool is_square(const BigInt& n, BigInt* root = nullptr);

std::uint64_t isqrt_u64(std::uint64_t n);
bool is_square_u64(std::uint64_t n);

inline BigInt babs(const BigInt& v) { return abs(v); }

}  // namespace pell
