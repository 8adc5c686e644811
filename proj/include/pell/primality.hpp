#pragma once

#include <cstdint>

#include "pell/bigint.hpp"

namespace pell {

// Deterministic for every 64-bit input (strong-pseudoprime test, first twelve prime bases).
bool is_prime(std::uint64_t n);

// Exact below 2^64, otherwise a fixed 30-round probabilistic test.
bool is_prime(const BigInt& n);

}  // namespace pell
