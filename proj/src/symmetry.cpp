#include "symprime/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symprime/primality.hpp"

namespace symprime {

namespace {

uint64_t gap_of(uint64_t p, uint64_t q) { return p < q ? q - p : p - q; }

bool gcd_symmetric(uint64_t p, uint64_t q) {
    return std::gcd(p - 1, q - 1) == gap_of(p, q);
}

void require_distinct_primes(uint64_t p, uint64_t q, const char* who) {
    if (p == q) throw std::invalid_argument(std::string(who) + ": p and q must be distinct");
    if (!is_prime_u64(p) || !is_prime_u64(q))
        throw std::invalid_argument(std::string(who) + ": inputs must be prime");
}

// Shared validation for is_symmetric_sequence; throws on malformed input.
void require_sorted_primes(const std::vector<uint64_t>& members, const char* who) {
    if (members.size() < 2)
        throw std::invalid_argument(std::string(who) + ": need at least two members");
    for (size_t i = 0; i < members.size(); ++i) {
        if (i > 0 && members[i] <= members[i - 1])
            throw std::invalid_argument(std::string(who) + ": members must be strictly increasing");
        if (!is_prime_u64(members[i]))
            throw std::invalid_argument(std::string(who) + ": " + std::to_string(members[i]) +
                                        " is not prime");
    }
}

bool all_pairs_symmetric(const std::vector<uint64_t>& members) {
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!gcd_symmetric(members[i], members[j])) return false;
    return true;
}

} // namespace

const char* to_string(Extremity e) {
    switch (e) {
        case Extremity::NotExtreme: return "not-extreme";
        case Extremity::ExtremeTripleHalf: return "extreme-triple-half";
        case Extremity::ExtremeTripleThird: return "extreme-triple-third";
        case Extremity::ExtremeQuadruple: return "extreme-quadruple";
    }
    return "?";
}

SymmetricSequence::SymmetricSequence(std::vector<uint64_t> members, Extremity extremity)
    : members_(std::move(members)), extremity_(extremity) {
    require_sorted_primes(members_, "SymmetricSequence");
    if (!all_pairs_symmetric(members_))
        throw std::invalid_argument("SymmetricSequence: members are not pairwise symmetric");
    uint64_t p = members_.front(), top = members_.back();
    if (top > 2 * p - 1)
        throw std::invalid_argument("SymmetricSequence: largest member exceeds 2*smallest - 1");
    if (extremity_ != Extremity::NotExtreme) {
        if (top != 2 * p - 1)
            throw std::invalid_argument("SymmetricSequence: extreme but largest != 2*smallest - 1");
        if (members_.size() > 4)
            throw std::invalid_argument("SymmetricSequence: extreme sequences have length <= 4");
        if (extremity_ != deduce_extremity(members_))
            throw std::invalid_argument("SymmetricSequence: extremity label does not match shape");
    }
}

std::vector<uint64_t> SymmetricSequence::gaps() const {
    std::vector<uint64_t> out;
    out.reserve(members_.size() - 1);
    for (size_t i = 1; i < members_.size(); ++i) out.push_back(members_[i] - members_[i - 1]);
    return out;
}

bool is_symmetric_pair(uint64_t p, uint64_t q, const PrimeSieve& sieve) {
    if (p == q) throw std::invalid_argument("is_symmetric_pair: p and q must be distinct");
    if (!is_prime(p, sieve) || !is_prime(q, sieve))
        throw std::invalid_argument("is_symmetric_pair: inputs must be prime");
    return gcd_symmetric(p, q);
}

bool is_symmetric_pair(uint64_t p, uint64_t q) {
    require_distinct_primes(p, q, "is_symmetric_pair");
    return gcd_symmetric(p, q);
}

LatticeSplit lattice_split(uint64_t p, uint64_t q) {
    // Row a holds (q-1)/2 points; those with b*p < a*q lie below the
    // diagonal, i.e. b <= floor((a*q - 1)/p) (never a tie: p | a*q would
    // force p | a, impossible for 1 <= a < p).
    LatticeSplit split{0, 0};
    uint64_t rows = (p - 1) / 2, cols = (q - 1) / 2;
    for (uint64_t a = 1; a <= rows; ++a) {
        uint64_t below = std::min(cols, (a * q - 1) / p);
        split.below += below;
        split.above += cols - below;
    }
    return split;
}

bool is_symmetric_pair_lattice(uint64_t p, uint64_t q) {
    if (p == 2 || q == 2)
        throw std::domain_error("is_symmetric_pair_lattice: the prime 2 is not supported");
    require_distinct_primes(p, q, "is_symmetric_pair_lattice");
    auto split = lattice_split(p, q);
    return split.above == split.below;
}

std::vector<uint64_t> symmetric_partners(uint64_t p, const PrimeSieve& sieve) {
    if (!is_prime_u64(p)) throw std::invalid_argument("symmetric_partners: p must be prime");
    if (2 * p - 1 > sieve.limit())
        throw std::out_of_range("symmetric_partners: sieve limit below 2p - 1");
    std::vector<uint64_t> out;
    for (uint64_t d : divisors(p - 1)) {
        // gcd(p-1, (p +- d) - 1) = gcd(p-1, d) = d, so only primality filters.
        if (p > d + 1 && sieve.is_prime(p - d)) out.push_back(p - d); // q >= 2
        if (sieve.is_prime(p + d)) out.push_back(p + d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_symmetric_sequence(const std::vector<uint64_t>& members, const PrimeSieve& sieve) {
    if (members.size() < 2)
        throw std::invalid_argument("is_symmetric_sequence: need at least two members");
    for (size_t i = 0; i < members.size(); ++i) {
        if (i > 0 && members[i] <= members[i - 1])
            throw std::invalid_argument("is_symmetric_sequence: members must be strictly increasing");
        if (!is_prime(members[i], sieve))
            throw std::invalid_argument("is_symmetric_sequence: " + std::to_string(members[i]) +
                                        " is not prime");
    }
    return all_pairs_symmetric(members);
}

bool is_symmetric_sequence(const std::vector<uint64_t>& members) {
    require_sorted_primes(members, "is_symmetric_sequence");
    return all_pairs_symmetric(members);
}

Extremity deduce_extremity(const std::vector<uint64_t>& members) {
    if (members.size() < 3 || members.size() > 4) return Extremity::NotExtreme;
    uint64_t p = members.front();
    if (members.back() != 2 * p - 1) return Extremity::NotExtreme;
    if (members.size() == 4) {
        if (p % 3 == 1 && members[1] == (4 * p - 1) / 3 && members[2] == (3 * p - 1) / 2)
            return Extremity::ExtremeQuadruple;
        return Extremity::NotExtreme;
    }
    if (p % 3 == 1 && members[1] == (4 * p - 1) / 3) return Extremity::ExtremeTripleThird;
    if (p % 2 == 1 && members[1] == (3 * p - 1) / 2) return Extremity::ExtremeTripleHalf;
    return Extremity::NotExtreme;
}

std::vector<SymmetricSequence> classify_extreme(uint64_t p, const PrimeSieve& sieve) {
    if (p < 3) throw std::invalid_argument("classify_extreme: p must be >= 3");
    if (!is_prime_u64(p)) throw std::invalid_argument("classify_extreme: p must be prime");
    if (2 * p - 1 > sieve.limit())
        throw std::out_of_range("classify_extreme: sieve limit below 2p - 1");

    std::vector<SymmetricSequence> out;
    uint64_t top = 2 * p - 1;
    if (!sieve.is_prime(top)) return out;

    // The gap theorem allows exactly two middles: (4p-1)/3 and (3p-1)/2.
    bool third = p % 3 == 1 && sieve.is_prime((4 * p - 1) / 3);
    bool half = sieve.is_prime((3 * p - 1) / 2); // p odd, so (3p-1)/2 is integral
    if (third)
        out.emplace_back(std::vector<uint64_t>{p, (4 * p - 1) / 3, top},
                         Extremity::ExtremeTripleThird);
    if (half)
        out.emplace_back(std::vector<uint64_t>{p, (3 * p - 1) / 2, top},
                         Extremity::ExtremeTripleHalf);
    if (third && half)
        out.emplace_back(std::vector<uint64_t>{p, (4 * p - 1) / 3, (3 * p - 1) / 2, top},
                         Extremity::ExtremeQuadruple);
    return out;
}

std::optional<SymmetricSequence> power_triple(uint64_t p, unsigned k, const PrimeSieve& sieve) {
    if (p >= 3 && 2 * p - 1 > sieve.limit())
        throw std::out_of_range("power_triple: sieve limit below 2p - 1");
    if (!is_prime_u64(p)) return std::nullopt;
    if (k + 1 >= 64) return std::nullopt; // 2^(k+1) > p - 1, cannot divide
    uint64_t div = uint64_t{1} << (k + 1);
    if (p < 3 || (p - 1) % div != 0) return std::nullopt;
    uint64_t mid = p + (p - 1) / div;
    uint64_t top = p + (p - 1) / (div / 2);
    if (!sieve.is_prime(mid) || !sieve.is_prime(top)) return std::nullopt;
    // Validating constructor doubles as the postcondition check.
    return SymmetricSequence({p, mid, top},
                             k == 0 ? Extremity::ExtremeTripleHalf : Extremity::NotExtreme);
}

} // namespace symprime
