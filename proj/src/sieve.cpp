#include "symprime/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symprime/parallel.hpp"

namespace symprime {

namespace {

uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

// Odd base primes up to `limit` by a plain byte sieve (limit is ~sqrt of the
// full range, so this stays small).
std::vector<uint64_t> odd_base_primes(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 3) return primes;
    std::vector<uint8_t> mark(limit + 1, 1);
    for (uint64_t i = 3; i * i <= limit; i += 2)
        if (mark[i])
            for (uint64_t j = i * i; j <= limit; j += 2 * i) mark[j] = 0;
    for (uint64_t i = 3; i <= limit; i += 2)
        if (mark[i]) primes.push_back(i);
    return primes;
}

} // namespace

uint64_t sieve_table_bytes(uint64_t limit) {
    uint64_t bits = limit < 3 ? 0 : (limit - 3) / 2 + 1;
    return (bits + 63) / 64 * sizeof(uint64_t);
}

PrimeSieve build_sieve(uint64_t limit, const SieveOptions& opts) {
    if (limit < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
    uint64_t bytes = sieve_table_bytes(limit);
    if (bytes > opts.memory_budget)
        throw ResourceError("build_sieve: bit table needs " + std::to_string(bytes) +
                                " bytes, budget is " + std::to_string(opts.memory_budget),
                            bytes, opts.memory_budget);

    PrimeSieve sieve(limit);
    uint64_t bits = PrimeSieve::bit_count(limit);
    if (bits == 0) return sieve; // limit == 2

    auto base = odd_base_primes(isqrt_u64(limit));

    // Word-aligned segments: each worker owns whole words of the table.
    uint64_t seg_bits = std::max<uint64_t>((opts.segment_odds + 63) / 64 * 64, 64);
    uint64_t segments = (bits + seg_bits - 1) / seg_bits;
    uint64_t* words = sieve.words_.data();

    detail::parallel_chunks(segments, opts.threads, [&](uint64_t seg) {
        uint64_t bit_lo = seg * seg_bits;
        uint64_t bit_hi = std::min(bit_lo + seg_bits, bits); // exclusive
        uint64_t n_lo = 2 * bit_lo + 3;                      // first odd covered
        for (uint64_t p : base) {
            uint64_t start = p * p;
            if (start > limit) break;
            if (start < n_lo) {
                // first odd multiple of p at or after n_lo
                uint64_t q = (n_lo + p - 1) / p;
                if ((q & 1) == 0) ++q;
                start = q * p;
            }
            for (uint64_t bit = (start - 3) >> 1; bit < bit_hi; bit += p)
                words[bit >> 6] &= ~(uint64_t{1} << (bit & 63));
        }
        // 1 is not represented (table starts at 3), nothing else to patch.
    });

    // Zero the slack bits past `bits` so popcount-based counting is exact.
    uint64_t used_in_last = bits & 63;
    if (used_in_last != 0) sieve.words_.back() &= (uint64_t{1} << used_in_last) - 1;
    return sieve;
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi, const PrimeSieve& sieve) {
    std::vector<uint64_t> out;
    for_each_prime(lo, hi, sieve, [&](uint64_t p) { out.push_back(p); });
    return out;
}

uint64_t prime_count(uint64_t x, const PrimeSieve& sieve) {
    if (x > sieve.limit()) throw std::out_of_range("prime_count: x exceeds sieve limit");
    if (x < 2) return 0;
    if (x < 3) return 1;
    uint64_t count = 1; // the prime 2
    uint64_t last = (x - ((x & 1) ? 3 : 4)) >> 1; // bit of largest odd <= x
    auto words = sieve.words();
    uint64_t full = last >> 6;
    for (uint64_t w = 0; w < full; ++w) count += static_cast<uint64_t>(std::popcount(words[w]));
    uint64_t mask = (last & 63) == 63 ? ~uint64_t{0} : ((uint64_t{1} << ((last & 63) + 1)) - 1);
    count += static_cast<uint64_t>(std::popcount(words[full] & mask));
    return count;
}

} // namespace symprime
