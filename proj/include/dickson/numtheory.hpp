#pragma once

#include <cstdint>
#include <vector>

// Integer helpers used for group orders and degree bookkeeping. Inputs are
// bounded by the field size limit, so trial division is adequate.
namespace dickson::nt {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order; empty for n <= 1.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Product of the distinct primes dividing n; rad(1) = 1.
std::uint64_t rad(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Checked power; returns 0 when the result would exceed `limit`.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit);

/// Splits n = 2^r * s with s odd.
struct TwoAdic {
    unsigned r;
    std::uint64_t s;
};
TwoAdic split_two(std::uint64_t n);

}  // namespace dickson::nt
