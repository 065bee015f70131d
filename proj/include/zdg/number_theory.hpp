#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace zdg {

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, as (prime, exponent) pairs in
// increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Euler's totient via trial-division factorization. euler_phi(1) == 1.
std::uint64_t euler_phi(std::uint64_t m);

std::vector<std::uint64_t> divisors(std::uint64_t n);

// (p, k) with n == p^k, or nullopt if n is not a prime power (n >= 2).
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(
    std::uint64_t n);

// base^exp, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit = UINT64_MAX);

// Exponent of p in n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

}  // namespace zdg
