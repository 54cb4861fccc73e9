#include "symprime/primality.hpp"

#include <algorithm>
#include <stdexcept>

namespace symprime {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// One Miller-Rabin round with witness a; n odd >= 3, n - 1 = 2^r * d.
bool witness_passes(uint64_t n, uint64_t a, uint64_t d, int r) {
    a %= n;
    if (a == 0) return true;
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // {2,...,37} is a deterministic witness set for all n < 3.1e24 (> 2^64).
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!witness_passes(n, a, d, r)) return false;
    return true;
}

bool is_prime(uint64_t n, const PrimeSieve& sieve) {
    if (n <= sieve.limit()) return sieve.is_prime(n);
    return is_prime_u64(n);
}

std::vector<uint64_t> divisors(uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<uint64_t> small, large;
    for (uint64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace symprime
