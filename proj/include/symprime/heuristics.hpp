#pragma once

#include <cstdint>
#include <vector>

#include "symprime/errors.hpp"
#include "symprime/family.hpp"

namespace symprime {

inline constexpr uint64_t kDefaultSeriesCutoff = 10'000'000;
inline constexpr double kDefaultQuadTolerance = 1e-9;

// An integer linear form a*k + b with positive leading coefficient.
struct LinearForm {
    uint64_t a = 1;
    uint64_t b = 0;
    uint64_t eval(uint64_t k) const { return a * k + b; }
    bool operator==(const LinearForm&) const = default;
};

// A set of linear forms with its omega profile: omega(p) counts the
// residues k mod p where the product of the forms vanishes.
class LinearFormSystem {
public:
    explicit LinearFormSystem(std::vector<LinearForm> forms);

    const std::vector<LinearForm>& forms() const noexcept { return forms_; }
    size_t arity() const noexcept { return forms_.size(); }

    // omega(p) for prime p: direct root arithmetic up to generic_threshold(),
    // the precomputed constant value beyond (no form has a root collision or
    // a vanishing coefficient past that point).
    uint64_t omega(uint64_t p) const;

    // Literal definition: scan all residues 0 <= k < p. O(p * arity); the
    // oracle route for tests.
    uint64_t omega_residue_scan(uint64_t p) const;

    // Per-form roots -b/a mod p, counted without multiplicity.
    uint64_t omega_from_roots(uint64_t p) const;

    uint64_t generic_threshold() const noexcept { return generic_threshold_; }
    uint64_t generic_omega() const noexcept { return generic_omega_; }

private:
    std::vector<LinearForm> forms_;
    uint64_t generic_threshold_; // max of coefficients and pairwise root determinants
    uint64_t generic_omega_;     // number of proportionality classes of forms
};

// No fixed prime divisor: omega(p) < p for every prime. Checking p <= arity
// suffices once no form is identically zero mod some prime (i.e. all
// gcd(a, b) = 1), since omega(p) <= arity beyond.
bool is_admissible(const LinearFormSystem& system);

struct SingularSeries {
    double value = 1;              // tail-corrected product over all primes
    double partial = 1;            // raw product over p <= cutoff
    double small_prime_factor = 1; // exact rational factor over p < 5
    double residual = 1;           // tail-corrected product over p >= 5
    double residual_partial = 1;   // raw residual over 5 <= p <= cutoff
    double tail_log = 0;           // estimated log-space truncation correction
    uint64_t cutoff = 0;
};

// Product over primes p <= cutoff of (1 - omega(p)/p) / (1 - 1/p)^m,
// accumulated in Kahan-compensated log space (ascending p = descending
// magnitude), then corrected by the estimated tail beyond the cutoff.
// Requires an admissible system with pairwise non-proportional forms
// (otherwise the product diverges) and cutoff >= max(arity, 2).
SingularSeries singular_series(const LinearFormSystem& system,
                               uint64_t cutoff = kDefaultSeriesCutoff);

// Cramer-model density for simultaneous primality at y: 1 / prod log(a_i*y).
// The offsets ride along only in omega; the printed estimates use the
// leading terms in the logarithms.
double cramer_density(const LinearFormSystem& system, double y);

// Integral of the density over [lower, upper] to the requested relative
// tolerance, by adaptive Simpson over geometrically spaced initial panels
// (the integrand varies on a logarithmic scale). Requires lower >= 1,
// upper >= lower, tolerance > 0, and smallest coefficient >= 2. Throws
// QuadratureError with the best estimate when the subdivision budget runs
// out before the tolerance is met.
double hl_integral(const LinearFormSystem& system, double lower, double upper,
                   double tolerance = kDefaultQuadTolerance);

struct EstimateOptions {
    uint64_t series_cutoff = kDefaultSeriesCutoff;
    double quad_tolerance = kDefaultQuadTolerance;
};

struct EstimateResult {
    Family family;
    uint64_t x = 0;
    double singular_series = 0;    // full product over all primes
    double small_prime_factor = 0; // 9/2, 9 or 27 for the three families
    double residual = 0;           // product over p >= 5
    double integral = 0;
    double estimate = 0;           // singular_series * integral
    int64_t rounded = 0;           // table display: round half away from zero
    uint64_t series_cutoff = 0;
    double series_tail_log = 0;
    double quad_tolerance = 0;
};

// The form system behind an extreme family. Prime families have none
// (std::invalid_argument).
LinearFormSystem family_forms(Family family);

// Heuristic count of the family up to x: singular series times the density
// integral over [1, x/a_min]. Requires x >= 6 and an extreme family.
EstimateResult estimate_count(Family family, uint64_t x, const EstimateOptions& opts = {});

// 1 - (1 + log log 2)/log 2, natural logs; the exponent constant of the
// symmetric-prime density bound.
double eta_constant();

} // namespace symprime
