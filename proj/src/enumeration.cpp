#include "symprime/enumeration.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "symprime/parallel.hpp"
#include "symprime/primality.hpp"

namespace symprime {

namespace {

using Clock = std::chrono::steady_clock;

uint64_t checked_double(uint64_t x) {
    if (x > (std::numeric_limits<uint64_t>::max() - 1) / 2)
        throw std::invalid_argument("x too large: sieve limit 2x+1 overflows");
    return 2 * x;
}

SieveOptions sieve_options(const CountOptions& opts) {
    return SieveOptions{opts.segment_odds, opts.memory_budget, opts.threads};
}

bool gcd_symmetric(uint64_t p, uint64_t q) {
    return std::gcd(p - 1, q - 1) == (p < q ? q - p : p - q);
}

// One extreme family: members are form[i]*k + 1, the smallest prime comes
// from forms[0], and witnesses only occur at k = 0 (mod step).
struct TupleFamily {
    Family family;
    std::array<uint64_t, 4> forms;
    unsigned arity;
    uint64_t step;
    Extremity extremity;
};

constexpr TupleFamily kHalf{Family::ExtremeHalf, {2, 3, 4, 0}, 3, 6, Extremity::ExtremeTripleHalf};
constexpr TupleFamily kThird{Family::ExtremeThird, {3, 4, 6, 0}, 3, 2, Extremity::ExtremeTripleThird};
constexpr TupleFamily kQuad{Family::ExtremeQuadruple, {6, 8, 9, 12}, 4, 2, Extremity::ExtremeQuadruple};

CountResult count_tuples(const TupleFamily& fam, uint64_t x, const CountOptions& opts) {
    if (x < 3) throw std::invalid_argument("count: x must be >= 3");
    auto t0 = Clock::now();
    uint64_t limit = checked_double(x) + 1;
    PrimeSieve sieve = build_sieve(limit, sieve_options(opts));

    // p = forms[0]*k + 1 <= x, stepping k over the admissible congruence class.
    uint64_t kmax = (x - 1) / fam.forms[0];
    uint64_t tmax = kmax / fam.step; // k = t * step, t = 1..tmax

    constexpr uint64_t kChunk = uint64_t{1} << 16;
    uint64_t chunks = tmax == 0 ? 0 : (tmax + kChunk - 1) / kChunk;
    std::vector<uint64_t> partial(chunks, 0);
    std::vector<std::vector<SymmetricSequence>> found(opts.materialize_witnesses ? chunks : 0);

    detail::parallel_chunks(chunks, opts.threads, [&](uint64_t c) {
        uint64_t t_lo = c * kChunk + 1;
        uint64_t t_hi = std::min(tmax, t_lo + kChunk - 1);
        uint64_t count = 0;
        for (uint64_t t = t_lo; t <= t_hi; ++t) {
            uint64_t k = t * fam.step;
            bool all = true;
            for (unsigned i = 0; i < fam.arity && all; ++i)
                all = sieve.is_prime(fam.forms[i] * k + 1);
            if (!all) continue;
            ++count;
            if (opts.materialize_witnesses) {
                std::vector<uint64_t> members(fam.arity);
                for (unsigned i = 0; i < fam.arity; ++i) members[i] = fam.forms[i] * k + 1;
                found[c].emplace_back(std::move(members), fam.extremity);
            }
        }
        partial[c] = count;
    });

    CountResult result;
    result.family = fam.family;
    result.x = x;
    result.count = std::accumulate(partial.begin(), partial.end(), uint64_t{0});
    if (opts.materialize_witnesses) {
        result.sequences.emplace();
        for (auto& chunk : found)
            for (auto& seq : chunk) result.sequences->push_back(std::move(seq));
    }
    result.elapsed = Clock::now() - t0;
    return result;
}

// d runs over divisors of p-1 without materializing them; for each d the
// partners p - d and p + d are the only candidates at that gap.
bool has_symmetric_partner(uint64_t p, const PrimeSieve& sieve) {
    uint64_t n = p - 1;
    for (uint64_t i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        for (uint64_t d : {i, n / i}) {
            if (p > d + 1 && sieve.is_prime(p - d)) return true;
            if (sieve.is_prime(p + d)) return true;
        }
    }
    return false;
}

CountResult scan_symmetric(uint64_t x, const CountOptions& opts, bool want_symmetric) {
    if (x < 2) throw std::invalid_argument("count_symmetric_primes: x must be >= 2");
    auto t0 = Clock::now();
    PrimeSieve sieve = build_sieve(checked_double(x), sieve_options(opts));

    constexpr uint64_t kSpan = uint64_t{1} << 16;
    uint64_t hi = x - 1; // primes p < x
    uint64_t chunks = hi < 2 ? 0 : (hi - 2) / kSpan + 1;
    std::vector<uint64_t> partial(chunks, 0);
    std::vector<std::vector<uint64_t>> found(opts.materialize_witnesses ? chunks : 0);

    detail::parallel_chunks(chunks, opts.threads, [&](uint64_t c) {
        uint64_t lo = 2 + c * kSpan;
        uint64_t up = std::min(hi, lo + kSpan - 1);
        uint64_t count = 0;
        for_each_prime(lo, up, sieve, [&](uint64_t p) {
            if (has_symmetric_partner(p, sieve) != want_symmetric) return;
            ++count;
            if (opts.materialize_witnesses) found[c].push_back(p);
        });
        partial[c] = count;
    });

    CountResult result;
    result.family = want_symmetric ? Family::SymmetricPrimes : Family::AsymmetricPrimes;
    result.x = x;
    result.count = std::accumulate(partial.begin(), partial.end(), uint64_t{0});
    if (opts.materialize_witnesses) {
        result.members.emplace();
        for (auto& chunk : found)
            result.members->insert(result.members->end(), chunk.begin(), chunk.end());
    }
    result.elapsed = Clock::now() - t0;
    return result;
}

} // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::ExtremeHalf: return "half";
        case Family::ExtremeThird: return "third";
        case Family::ExtremeQuadruple: return "quadruple";
        case Family::SymmetricPrimes: return "symmetric";
        case Family::AsymmetricPrimes: return "asymmetric";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "half") return Family::ExtremeHalf;
    if (name == "third") return Family::ExtremeThird;
    if (name == "quadruple") return Family::ExtremeQuadruple;
    if (name == "symmetric") return Family::SymmetricPrimes;
    if (name == "asymmetric") return Family::AsymmetricPrimes;
    throw std::invalid_argument("unknown family: " + name);
}

uint64_t required_sieve_limit(Family family, uint64_t x) {
    switch (family) {
        case Family::ExtremeHalf:
        case Family::ExtremeThird:
        case Family::ExtremeQuadruple: return checked_double(x) + 1;
        case Family::SymmetricPrimes:
        case Family::AsymmetricPrimes: return checked_double(x);
    }
    throw std::invalid_argument("unknown family");
}

CountResult count_extreme_half(uint64_t x, const CountOptions& opts) {
    return count_tuples(kHalf, x, opts);
}

CountResult count_extreme_third(uint64_t x, const CountOptions& opts) {
    return count_tuples(kThird, x, opts);
}

CountResult count_extreme_quadruples(uint64_t x, const CountOptions& opts) {
    return count_tuples(kQuad, x, opts);
}

CountResult count_symmetric_primes(uint64_t x, const CountOptions& opts) {
    return scan_symmetric(x, opts, true);
}

std::vector<uint64_t> list_asymmetric_primes(uint64_t x, const CountOptions& opts) {
    CountOptions with_list = opts;
    with_list.materialize_witnesses = true;
    return std::move(*scan_symmetric(x, with_list, false).members);
}

CountResult count_family(Family family, uint64_t x, const CountOptions& opts) {
    switch (family) {
        case Family::ExtremeHalf: return count_extreme_half(x, opts);
        case Family::ExtremeThird: return count_extreme_third(x, opts);
        case Family::ExtremeQuadruple: return count_extreme_quadruples(x, opts);
        case Family::SymmetricPrimes: return count_symmetric_primes(x, opts);
        case Family::AsymmetricPrimes: return scan_symmetric(x, opts, false);
    }
    throw std::invalid_argument("unknown family");
}

const std::vector<uint64_t>& SymmetryGraph::neighbors(uint64_t p) const {
    static const std::vector<uint64_t> empty;
    size_t i = index_of(p);
    return i == SIZE_MAX ? empty : adj_[i];
}

size_t SymmetryGraph::index_of(uint64_t p) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end() || *it != p) return SIZE_MAX;
    return static_cast<size_t>(it - vertices_.begin());
}

std::vector<std::pair<uint64_t, uint64_t>> SymmetryGraph::edges() const {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    out.reserve(edge_count_);
    for (size_t i = 0; i < vertices_.size(); ++i)
        for (uint64_t q : adj_[i])
            if (q > vertices_[i]) out.emplace_back(vertices_[i], q);
    return out;
}

SymmetryGraph build_symmetry_graph(uint64_t x, const CountOptions& opts) {
    if (x < 2) throw std::invalid_argument("build_symmetry_graph: x must be >= 2");
    PrimeSieve sieve = build_sieve(checked_double(x), sieve_options(opts));

    SymmetryGraph graph;
    graph.x_ = x;
    graph.vertices_ = primes_in(2, x, sieve);
    graph.adj_.resize(graph.vertices_.size());

    constexpr uint64_t kVerticesPerChunk = 1024;
    uint64_t chunks = (graph.vertices_.size() + kVerticesPerChunk - 1) / kVerticesPerChunk;
    detail::parallel_chunks(chunks, opts.threads, [&](uint64_t c) {
        size_t lo = static_cast<size_t>(c * kVerticesPerChunk);
        size_t up = std::min(graph.vertices_.size(), lo + kVerticesPerChunk);
        for (size_t i = lo; i < up; ++i) {
            auto partners = symmetric_partners(graph.vertices_[i], sieve);
            auto cut = std::upper_bound(partners.begin(), partners.end(), x);
            partners.erase(cut, partners.end());
            graph.adj_[i] = std::move(partners);
        }
    });

    size_t total = 0;
    for (const auto& nb : graph.adj_) total += nb.size();
    graph.edge_count_ = total / 2;
    return graph;
}

std::vector<SymmetricSequence> find_cliques(const SymmetryGraph& graph, unsigned m) {
    if (m < 3) throw std::invalid_argument("find_cliques: m must be >= 3");
    std::vector<SymmetricSequence> out;

    auto adjacent = [&](uint64_t p, uint64_t q) {
        const auto& nb = graph.neighbors(p);
        return std::binary_search(nb.begin(), nb.end(), q);
    };

    std::vector<uint64_t> current;
    // Extends `current` with candidates cand[from..]; candidates are sorted
    // and all adjacent to current.front().
    auto extend = [&](auto&& self, const std::vector<uint64_t>& cand, size_t from) -> void {
        if (current.size() == m) {
            out.emplace_back(current, deduce_extremity(current));
            return;
        }
        for (size_t j = from; j < cand.size(); ++j) {
            uint64_t q = cand[j];
            bool ok = true;
            for (size_t i = 1; i < current.size() && ok; ++i) ok = adjacent(current[i], q);
            if (!ok) continue;
            current.push_back(q);
            self(self, cand, j + 1);
            current.pop_back();
        }
    };

    for (uint64_t p : graph.vertices()) {
        const auto& nb = graph.neighbors(p);
        // Cliques are identified by their smallest member; all other members
        // sit in p's neighborhood above p (and below 2p by the pair bound).
        std::vector<uint64_t> cand(std::upper_bound(nb.begin(), nb.end(), p), nb.end());
        if (cand.size() + 1 < m) continue;
        current.assign(1, p);
        extend(extend, cand, 0);
    }
    return out;
}

void write_edge_csv(const SymmetryGraph& graph, std::ostream& out) {
    out << "p,q,gap\n";
    for (const auto& [p, q] : graph.edges()) out << p << ',' << q << ',' << q - p << '\n';
}

void write_graph_text(const SymmetryGraph& graph, std::ostream& out) {
    for (uint64_t v : graph.vertices()) out << "vertex " << v << '\n';
    for (const auto& [p, q] : graph.edges()) out << "edge " << p << ' ' << q << '\n';
}

namespace {

void add_counterexample(ScanReport& report, std::vector<uint64_t> tuple) {
    ++report.counterexample_count;
    if (report.counterexamples.size() < ScanReport::kMaxStored)
        report.counterexamples.push_back(std::move(tuple));
}

// Middles of a potential extreme sequence starting at p: every prime
// p + d (d | p-1, d < p-1) symmetric with both endpoints, verified by
// explicit gcd checks rather than the divisor shortcut.
std::vector<uint64_t> extreme_middles(uint64_t p, const PrimeSieve& sieve) {
    std::vector<uint64_t> middles;
    uint64_t top = 2 * p - 1;
    for (uint64_t d : divisors(p - 1)) {
        if (d == p - 1) continue;
        uint64_t q = p + d;
        if (!sieve.is_prime(q)) continue;
        if (gcd_symmetric(p, q) && gcd_symmetric(q, top)) middles.push_back(q);
    }
    return middles;
}

void scan_lemma1(ScanReport& report, uint64_t x, const PrimeSieve& sieve, bool first_form) {
    uint64_t mid_gap = first_form ? 2 : 4; // (p, p+2, p+6) vs (p, p+4, p+6)
    for_each_prime(2, x, sieve, [&](uint64_t p) {
        if (!sieve.is_prime(p + mid_gap) || !sieve.is_prime(p + 6)) return;
        ++report.configurations;
        bool symmetric = gcd_symmetric(p, p + mid_gap) && gcd_symmetric(p, p + 6) &&
                         gcd_symmetric(p + mid_gap, p + 6);
        if (first_form) {
            if (symmetric) add_counterexample(report, {p, p + 2, p + 6});
        } else {
            if (symmetric && p % 12 != 1) add_counterexample(report, {p, p + 4, p + 6});
        }
    });
}

void scan_lemma2(ScanReport& report, uint64_t x, const PrimeSieve& sieve) {
    // Every prime q strictly between (3p-1)/2 and 2p-1 is tested directly.
    for_each_prime(3, x, sieve, [&](uint64_t p) {
        uint64_t lo = (3 * p - 1) / 2 + 1;
        uint64_t hi = 2 * p - 2;
        if (lo > hi) return;
        for_each_prime(lo, hi, sieve, [&](uint64_t q) {
            ++report.configurations;
            if (gcd_symmetric(p, q)) add_counterexample(report, {p, q});
        });
    });
}

void scan_theorem1(ScanReport& report, uint64_t x, const PrimeSieve& sieve) {
    for_each_prime(3, x, sieve, [&](uint64_t p) {
        uint64_t top = 2 * p - 1;
        if (!sieve.is_prime(top)) return;
        for (uint64_t d : divisors(p - 1)) {
            if (d == p - 1) continue;
            uint64_t q = p + d;
            if (!sieve.is_prime(q)) continue;
            ++report.configurations;
            if (!gcd_symmetric(p, q) || !gcd_symmetric(q, top)) continue;
            if (3 * d != p - 1 && 2 * d != p - 1) add_counterexample(report, {p, q, top});
        }
    });
}

void scan_maxlen4(ScanReport& report, uint64_t x, const PrimeSieve& sieve) {
    for_each_prime(3, x, sieve, [&](uint64_t p) {
        uint64_t top = 2 * p - 1;
        if (!sieve.is_prime(top)) return;
        ++report.configurations;
        auto middles = extreme_middles(p, sieve);
        // Three mutually symmetric middles would give a length-5 sequence.
        for (size_t i = 0; i < middles.size(); ++i)
            for (size_t j = i + 1; j < middles.size(); ++j) {
                if (!gcd_symmetric(middles[i], middles[j])) continue;
                for (size_t l = j + 1; l < middles.size(); ++l)
                    if (gcd_symmetric(middles[i], middles[l]) &&
                        gcd_symmetric(middles[j], middles[l]))
                        add_counterexample(report, {p, middles[i], middles[j], middles[l], top});
            }
    });
}

void scan_congruence_half(ScanReport& report, uint64_t x, const PrimeSieve& sieve) {
    for_each_prime(3, x, sieve, [&](uint64_t p) {
        if (!sieve.is_prime((3 * p - 1) / 2) || !sieve.is_prime(2 * p - 1)) return;
        ++report.configurations;
        if (p % 12 != 1) add_counterexample(report, {p});
    });
}

void scan_congruence_quad(ScanReport& report, uint64_t x, const PrimeSieve& sieve) {
    for_each_prime(3, x, sieve, [&](uint64_t p) {
        uint64_t top = 2 * p - 1;
        if (!sieve.is_prime(top)) return;
        auto middles = extreme_middles(p, sieve);
        for (size_t i = 0; i < middles.size(); ++i)
            for (size_t j = i + 1; j < middles.size(); ++j) {
                if (!gcd_symmetric(middles[i], middles[j])) continue;
                ++report.configurations;
                if (p % 6 != 1) add_counterexample(report, {p, middles[i], middles[j], top});
            }
    });
}

void scan_equivalence(ScanReport& report, uint64_t x, const PrimeSieve& sieve) {
    // Odd prime pairs p < q <= 2p-1 with p < x.
    if (x < 4) return;
    for_each_prime(3, x - 1, sieve, [&](uint64_t p) {
        for_each_prime(p + 2, 2 * p - 1, sieve, [&](uint64_t q) {
            ++report.configurations;
            if (is_symmetric_pair(p, q, sieve) != is_symmetric_pair_lattice(p, q))
                add_counterexample(report, {p, q});
        });
    });
}

} // namespace

const char* to_string(ScanProperty property) {
    switch (property) {
        case ScanProperty::Lemma1a: return "lemma1a";
        case ScanProperty::Lemma1b: return "lemma1b";
        case ScanProperty::Lemma2: return "lemma2";
        case ScanProperty::Theorem1: return "theorem1";
        case ScanProperty::MaxLen4: return "maxlen4";
        case ScanProperty::CongruenceHalf: return "congruence-half";
        case ScanProperty::CongruenceQuad: return "congruence-quad";
        case ScanProperty::Equivalence: return "equivalence";
    }
    return "?";
}

ScanProperty parse_scan_property(const std::string& name) {
    if (name == "lemma1a") return ScanProperty::Lemma1a;
    if (name == "lemma1b") return ScanProperty::Lemma1b;
    if (name == "lemma2") return ScanProperty::Lemma2;
    if (name == "theorem1") return ScanProperty::Theorem1;
    if (name == "maxlen4") return ScanProperty::MaxLen4;
    if (name == "congruence-half") return ScanProperty::CongruenceHalf;
    if (name == "congruence-quad") return ScanProperty::CongruenceQuad;
    if (name == "equivalence") return ScanProperty::Equivalence;
    throw std::invalid_argument("unknown scan property: " + name);
}

ScanReport verify_scan(ScanProperty property, uint64_t x, const CountOptions& opts) {
    if (x < 2) throw std::invalid_argument("verify_scan: x must be >= 2");
    auto t0 = Clock::now();
    uint64_t limit = std::max(checked_double(x) + 1, x + 6);
    PrimeSieve sieve = build_sieve(limit, sieve_options(opts));

    ScanReport report;
    report.property = property;
    report.x = x;
    switch (property) {
        case ScanProperty::Lemma1a: scan_lemma1(report, x, sieve, true); break;
        case ScanProperty::Lemma1b: scan_lemma1(report, x, sieve, false); break;
        case ScanProperty::Lemma2: scan_lemma2(report, x, sieve); break;
        case ScanProperty::Theorem1: scan_theorem1(report, x, sieve); break;
        case ScanProperty::MaxLen4: scan_maxlen4(report, x, sieve); break;
        case ScanProperty::CongruenceHalf: scan_congruence_half(report, x, sieve); break;
        case ScanProperty::CongruenceQuad: scan_congruence_quad(report, x, sieve); break;
        case ScanProperty::Equivalence: scan_equivalence(report, x, sieve); break;
    }
    report.elapsed = Clock::now() - t0;
    return report;
}

} // namespace symprime
