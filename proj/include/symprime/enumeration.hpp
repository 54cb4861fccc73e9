#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "symprime/family.hpp"
#include "symprime/symmetry.hpp"

namespace symprime {

struct CountOptions {
    bool materialize_witnesses = false; // large counts stay list-free by default
    unsigned threads = 0;               // 0 = hardware concurrency
    uint64_t memory_budget = kDefaultMemoryBudget;
    uint64_t segment_odds = kDefaultSegmentOdds;
};

struct CountResult {
    Family family;
    uint64_t x;
    uint64_t count = 0;
    std::chrono::duration<double> elapsed{0};
    // Witnesses, present only when requested: the counted sequences for the
    // extreme families, the counted primes for the prime families.
    std::optional<std::vector<SymmetricSequence>> sequences;
    std::optional<std::vector<uint64_t>> members;
};

// S(x): primes p <= x with (p, (3p-1)/2, 2p-1) an extreme symmetric triple,
// counted as k with 2k+1 <= x and 2k+1, 3k+1, 4k+1 all prime. Sieve limit
// 2x+1; ResourceError when that exceeds the memory budget. Requires x >= 3.
CountResult count_extreme_half(uint64_t x, const CountOptions& opts = {});

// T(x): same for (p, (4p-1)/3, 2p-1), i.e. 3k+1, 4k+1, 6k+1 with 3k+1 <= x.
CountResult count_extreme_third(uint64_t x, const CountOptions& opts = {});

// W(x): extreme quadruples, i.e. 6k+1, 8k+1, 9k+1, 12k+1 with 6k+1 <= x.
CountResult count_extreme_quadruples(uint64_t x, const CountOptions& opts = {});

// Primes p < x (exclusive) belonging to at least one symmetric pair.
// Sieve limit 2x. Requires x >= 2.
CountResult count_symmetric_primes(uint64_t x, const CountOptions& opts = {});

// Complement of the above: primes p < x with no symmetric partner.
std::vector<uint64_t> list_asymmetric_primes(uint64_t x, const CountOptions& opts = {});

// Dispatcher over the five families (AsymmetricPrimes wraps the list).
CountResult count_family(Family family, uint64_t x, const CountOptions& opts = {});

// Sieve limit a family's count at x needs, for up-front budget checks.
uint64_t required_sieve_limit(Family family, uint64_t x);

// Undirected graph on the primes <= x with symmetric pairs as edges.
class SymmetryGraph {
public:
    uint64_t x() const noexcept { return x_; }
    const std::vector<uint64_t>& vertices() const noexcept { return vertices_; }
    // Sorted partner list of p restricted to <= x; empty for non-vertices.
    const std::vector<uint64_t>& neighbors(uint64_t p) const;
    size_t degree(uint64_t p) const { return neighbors(p).size(); }
    // Edges as (p, q) with p < q, ordered lexicographically.
    std::vector<std::pair<uint64_t, uint64_t>> edges() const;
    size_t edge_count() const noexcept { return edge_count_; }

private:
    friend SymmetryGraph build_symmetry_graph(uint64_t, const CountOptions&);
    uint64_t x_ = 0;
    std::vector<uint64_t> vertices_;          // ascending primes <= x
    std::vector<std::vector<uint64_t>> adj_;  // parallel to vertices_
    size_t edge_count_ = 0;

    size_t index_of(uint64_t p) const; // SIZE_MAX when absent
};

SymmetryGraph build_symmetry_graph(uint64_t x, const CountOptions& opts = {});

// All m-cliques (m >= 3), each a validated SymmetricSequence, ordered by
// smallest member. Candidate sets are the neighborhoods above each vertex,
// which the pair bound confines to [p, 2p-1], so the search is cheap even
// though clique enumeration is exponential in general.
std::vector<SymmetricSequence> find_cliques(const SymmetryGraph& graph, unsigned m);

// CSV edge list: header "p,q,gap", one "p,q,q-p" row per edge, LF endings.
void write_edge_csv(const SymmetryGraph& graph, std::ostream& out);

// Plain-text description: one "vertex <p>" line per vertex, then one
// "edge <p> <q>" line per edge.
void write_graph_text(const SymmetryGraph& graph, std::ostream& out);

// Counterexample scans for the structural claims. Each scan examines every
// relevant configuration up to x by an independent route (full interval
// scans, all divisors, no reliance on the claim being checked).
enum class ScanProperty {
    Lemma1a,        // no symmetric triple (p, p+2, p+6)
    Lemma1b,        // symmetric (p, p+4, p+6) only with p = 1 (mod 12)
    Lemma2,         // no symmetric pair with (3p-1)/2 < q < 2p-1
    Theorem1,       // extreme-triple middle gap is (p-1)/3 or (p-1)/2
    MaxLen4,        // no extreme symmetric sequence of length > 4
    CongruenceHalf, // half-family start satisfies p = 1 (mod 12)
    CongruenceQuad, // quadruple start satisfies p = 1 (mod 6)
    Equivalence,    // gcd form == lattice form for odd pairs, p < x
};

const char* to_string(ScanProperty property);
ScanProperty parse_scan_property(const std::string& name);

struct ScanReport {
    ScanProperty property;
    uint64_t x = 0;
    uint64_t configurations = 0;         // candidates examined
    uint64_t counterexample_count = 0;   // expected 0
    std::vector<std::vector<uint64_t>> counterexamples; // first kMaxStored kept
    std::chrono::duration<double> elapsed{0};

    static constexpr uint64_t kMaxStored = 1000;
    bool passed() const noexcept { return counterexample_count == 0; }
};

ScanReport verify_scan(ScanProperty property, uint64_t x, const CountOptions& opts = {});

} // namespace symprime
