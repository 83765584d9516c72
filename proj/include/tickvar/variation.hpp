#pragma once

#include <vector>

#include "tickvar/series.hpp"

namespace tickvar {

// Jordan decomposition of a sampled price path and the variation identities
//
//   sigma_plus - sigma_minus = D
//   sigma_plus + sigma_minus = V
//
// whose product puts (sigma_plus, sigma_minus) on the hyperbola
// sigma_plus * sigma_minus = (V^2 - D^2) / 4.
//
// The supremum in V is realized by the finest available partition: the
// samples themselves. No interpolation between ticks.

struct VariationProfile {
    std::vector<double> cumulative; // cumulative[i] = sum of |price steps| up to i
    double total = 0.0;             // = cumulative.back()
};

struct JordanPair {
    std::vector<double> f_plus;  // (V(t) + f(t)) / 2, non-decreasing
    std::vector<double> f_minus; // (V(t) - f(t)) / 2, non-decreasing
};

struct VariationSummary {
    double d = 0.0;           // endpoint difference f(b) - f(a)
    double v = 0.0;           // total variation over T
    double sigma_plus = 0.0;  // gain of the rising part
    double sigma_minus = 0.0; // gain of the falling part
};

VariationProfile total_variation(const PriceSeries& series);
JordanPair jordan_decompose(const PriceSeries& series);
VariationSummary variation_summary(const PriceSeries& series);

} // namespace tickvar
