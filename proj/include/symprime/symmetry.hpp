#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symprime/sieve.hpp"

namespace symprime {

enum class Extremity {
    NotExtreme,
    ExtremeTripleHalf,  // (p, (3p-1)/2, 2p-1)
    ExtremeTripleThird, // (p, (4p-1)/3, 2p-1)
    ExtremeQuadruple,   // (p, (4p-1)/3, (3p-1)/2, 2p-1)
};

const char* to_string(Extremity e);

// A sorted set of primes, every pair of which is symmetric, plus its
// extremity classification. The constructor re-checks every invariant
// (members prime, pairwise symmetric, largest <= 2*smallest - 1, extremity
// consistent with the shape) and throws std::invalid_argument on violation,
// so an instance is always valid.
class SymmetricSequence {
public:
    SymmetricSequence(std::vector<uint64_t> members, Extremity extremity);

    const std::vector<uint64_t>& primes() const noexcept { return members_; }
    std::vector<uint64_t> gaps() const; // consecutive differences
    Extremity extremity() const noexcept { return extremity_; }
    uint64_t smallest() const noexcept { return members_.front(); }
    uint64_t largest() const noexcept { return members_.back(); }
    size_t size() const noexcept { return members_.size(); }

    bool operator==(const SymmetricSequence&) const = default;

private:
    std::vector<uint64_t> members_;
    Extremity extremity_;
};

// gcd characterization: p, q symmetric iff gcd(p-1, q-1) = |p-q|.
// Inputs must be distinct primes (std::invalid_argument otherwise); the
// overload without a sieve uses the deterministic test.
bool is_symmetric_pair(uint64_t p, uint64_t q, const PrimeSieve& sieve);
bool is_symmetric_pair(uint64_t p, uint64_t q);

// Interior lattice points of the rectangle with corner (p/2, q/2), split by
// the main diagonal. No point lies on the diagonal for distinct primes.
struct LatticeSplit {
    uint64_t above;
    uint64_t below;
};
LatticeSplit lattice_split(uint64_t p, uint64_t q);

// Lattice-point characterization: equal counts above and below the diagonal.
// Defined for distinct odd primes; the prime 2 is rejected with
// std::domain_error (the gcd form is the total one).
bool is_symmetric_pair_lattice(uint64_t p, uint64_t q);

// Every prime q != p forming a symmetric pair with p, ascending. Complete:
// any such q is p +- d for a divisor d of p-1, and the gcd condition is then
// automatic, so only primality filters the candidates.
// Requires 2p - 1 <= sieve.limit() (std::out_of_range otherwise).
std::vector<uint64_t> symmetric_partners(uint64_t p, const PrimeSieve& sieve);

// True iff every unordered pair of the (strictly increasing, all-prime,
// length >= 2) list is symmetric. Malformed input -> std::invalid_argument.
bool is_symmetric_sequence(const std::vector<uint64_t>& members, const PrimeSieve& sieve);
bool is_symmetric_sequence(const std::vector<uint64_t>& members);

// Extremity of an already-sorted symmetric clique, from its shape alone.
Extremity deduce_extremity(const std::vector<uint64_t>& members);

// All extreme symmetric sequences whose smallest prime is p: at most the two
// triples permitted by the gap theorem (middle (4p-1)/3 first, then
// (3p-1)/2) and, when both middles are prime, the quadruple. Empty when
// 2p - 1 is composite. Requires p prime, p >= 3, 2p - 1 <= sieve.limit().
std::vector<SymmetricSequence> classify_extreme(uint64_t p, const PrimeSieve& sieve);

// The triple (p, p + (p-1)/2^(k+1), p + (p-1)/2^k) when 2^(k+1) divides
// p - 1 and all three members are prime; absent otherwise. The k = 0 case
// is the extreme half-family triple. Requires 2p - 1 <= sieve.limit().
std::optional<SymmetricSequence> power_triple(uint64_t p, unsigned k, const PrimeSieve& sieve);

} // namespace symprime
