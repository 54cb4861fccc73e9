#pragma once

#include <cstdint>
#include <vector>

#include "symprime/sieve.hpp"

namespace symprime {

// Deterministic primality for any 64-bit n (no probabilistic error):
// trial division by a few small primes, then Miller-Rabin with a fixed
// witness set proven correct far beyond 2^64.
bool is_prime_u64(uint64_t n);

// Table lookup when n is covered by the sieve, deterministic test otherwise.
// Total for all 64-bit n; never throws.
bool is_prime(uint64_t n, const PrimeSieve& sieve);

// All positive divisors of n, ascending, by trial division to sqrt(n).
// Throws std::invalid_argument for n = 0.
std::vector<uint64_t> divisors(uint64_t n);

} // namespace symprime
