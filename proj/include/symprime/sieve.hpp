#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "symprime/errors.hpp"

namespace symprime {

inline constexpr uint64_t kDefaultSegmentOdds = uint64_t{1} << 20; // odd entries per segment
inline constexpr uint64_t kDefaultMemoryBudget = uint64_t{64} << 20; // bytes

struct SieveOptions {
    uint64_t segment_odds = kDefaultSegmentOdds; // rounded up to a multiple of 64
    uint64_t memory_budget = kDefaultMemoryBudget;
    unsigned threads = 0; // 0 = hardware concurrency
};

// Primality table for [2, limit]. One bit per odd number (bit i <-> 2i+3,
// set = prime); 2 is special-cased, so the table costs ~limit/16 bytes.
// Immutable after construction and safe to share across threads.
class PrimeSieve {
public:
    uint64_t limit() const noexcept { return limit_; }

    // Table lookup; requires n <= limit().
    bool is_prime(uint64_t n) const {
        if (n > limit_) throw std::out_of_range("PrimeSieve::is_prime: n exceeds sieve limit");
        if (n < 3) return n == 2;
        if ((n & 1) == 0) return false;
        uint64_t bit = (n - 3) >> 1;
        return (words_[bit >> 6] >> (bit & 63)) & 1;
    }

    uint64_t memory_bytes() const noexcept { return words_.size() * sizeof(uint64_t); }
    std::span<const uint64_t> words() const noexcept { return words_; }

private:
    friend PrimeSieve build_sieve(uint64_t, const SieveOptions&);

    explicit PrimeSieve(uint64_t limit)
        : limit_(limit), words_((bit_count(limit) + 63) / 64, ~uint64_t{0}) {}

    static uint64_t bit_count(uint64_t limit) { return limit < 3 ? 0 : (limit - 3) / 2 + 1; }

    uint64_t limit_;
    std::vector<uint64_t> words_;
};

// Builds the table segment by segment; peak extra memory beyond the bit
// table is one segment's worth of base-prime start offsets. Segments are
// word-aligned and written by at most one worker, so the result is
// bit-identical for any thread count.
//
// Throws std::invalid_argument for limit < 2 and ResourceError when the bit
// table would exceed opts.memory_budget.
PrimeSieve build_sieve(uint64_t limit, const SieveOptions& opts = {});

// Bytes the bit table for `limit` would occupy (budget checks before building).
uint64_t sieve_table_bytes(uint64_t limit);

// Calls fn(p) for every prime p in [lo, hi], ascending. Requires hi <= limit.
template <typename Fn>
void for_each_prime(uint64_t lo, uint64_t hi, const PrimeSieve& sieve, Fn&& fn) {
    if (lo > hi) throw std::invalid_argument("for_each_prime: lo > hi");
    if (hi > sieve.limit()) throw std::out_of_range("for_each_prime: hi exceeds sieve limit");
    if (lo <= 2 && 2 <= hi) fn(uint64_t{2});
    if (hi < 3) return;
    uint64_t from = lo < 3 ? 3 : (lo | 1);
    if (from > hi) return;
    uint64_t bit = (from - 3) >> 1;
    uint64_t last = (hi - ((hi & 1) ? 3 : 4)) >> 1; // bit of largest odd <= hi
    if (((hi & 1) ? hi : hi - 1) < 3) return;
    auto words = sieve.words();
    uint64_t w = bit >> 6;
    uint64_t word = words[w] & (~uint64_t{0} << (bit & 63));
    for (;;) {
        while (word != 0) {
            uint64_t b = (w << 6) + static_cast<uint64_t>(std::countr_zero(word));
            if (b > last) return;
            fn(2 * b + 3);
            word &= word - 1;
        }
        if (++w > (last >> 6)) return;
        word = words[w];
    }
}

// All primes in [lo, hi] as a vector. Requires lo <= hi <= limit.
std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi, const PrimeSieve& sieve);

// pi(x): number of primes <= x. Requires x <= limit.
uint64_t prime_count(uint64_t x, const PrimeSieve& sieve);

} // namespace symprime
