#pragma once

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tickvar/errors.hpp"

namespace tickvar {

using BigInt = boost::multiprecision::cpp_int;

// Distribution of the endpoint difference z over 2n unit oscillations:
// the number of sign sequences with difference z is C(2n, z + n), out of
// 2^(2n) sequences in total.

class CountDistribution {
public:
    CountDistribution(int n, std::vector<BigInt> counts, std::vector<double> probabilities);

    int n() const noexcept { return n_; }
    bool has_exact_counts() const noexcept { return !counts_.empty(); }

    // C(2n, z + n); zero outside [-n, n].
    const BigInt& count(int z) const;
    double probability(int z) const; // 0 outside [-n, n]

private:
    int n_;
    std::vector<BigInt> counts_;       // index z + n; empty above the exact cap
    std::vector<double> probabilities_; // index z + n
};

// Map between difference counts and sigma units: zeta_z = z * sqrt(2 / n).
struct ZetaScale {
    int n = 1;
    double delta() const { return std::sqrt(2.0 / n); }
    double zeta_of(int z) const { return z * delta(); }
};

// C(2n, z + n) as an exact integer; zero when |z| > n.
BigInt exact_count(int n, int z);

// Full distribution over z in [-n, n]. Exact counts and exact-ratio
// probabilities up to exact_cap; log-gamma probabilities beyond (counts
// omitted there to keep large n cheap).
CountDistribution distribution(int n, int exact_cap = 512);

// exp(-z^2 / n) / sqrt(pi n); identical to the sigma-unit form
// normal_pdf(zeta_z) * delta_zeta.
double gaussian_approx(int n, int z);

// Brute-force oracle: iterates all 2^(2n) up/down sequences of 2n unit
// oscillations and bins by half the signed sum. Capped at n <= 12.
CountDistribution enumerate_paths(int n);

} // namespace tickvar
