#pragma once

#include <string>

namespace symprime {

// The counted families. ExtremeHalf/ExtremeThird are the two triple shapes
// (p, (3p-1)/2, 2p-1) and (p, (4p-1)/3, 2p-1); ExtremeQuadruple combines
// them; the prime families count membership in at least one symmetric pair.
enum class Family {
    ExtremeHalf,
    ExtremeThird,
    ExtremeQuadruple,
    SymmetricPrimes,
    AsymmetricPrimes,
};

std::string to_string(Family family);

// Parses "half", "third", "quadruple", "symmetric", "asymmetric".
// Throws std::invalid_argument otherwise.
Family parse_family(const std::string& name);

} // namespace symprime
