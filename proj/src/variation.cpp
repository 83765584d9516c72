#include "tickvar/variation.hpp"

#include <algorithm>
#include <cmath>

namespace tickvar {

namespace {

void require_two_ticks(const PriceSeries& series, const char* op) {
    if (series.size() < 2)
        throw Error(Errc::series_too_short, "variation",
                    std::string(op) + " needs at least 2 ticks");
}

} // namespace

VariationProfile total_variation(const PriceSeries& series) {
    require_two_ticks(series, "total_variation");
    const auto& p = series.prices();
    VariationProfile profile;
    profile.cumulative.resize(p.size());
    profile.cumulative[0] = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i)
        profile.cumulative[i] = profile.cumulative[i - 1] + std::abs(p[i] - p[i - 1]);
    profile.total = profile.cumulative.back();
    return profile;
}

JordanPair jordan_decompose(const PriceSeries& series) {
    require_two_ticks(series, "jordan_decompose");
    const auto& p = series.prices();
    const auto profile = total_variation(series);
    JordanPair pair;
    pair.f_plus.resize(p.size());
    pair.f_minus.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        pair.f_plus[i] = (profile.cumulative[i] + p[i]) / 2.0;
        pair.f_minus[i] = (profile.cumulative[i] - p[i]) / 2.0;
    }
    return pair;
}

VariationSummary variation_summary(const PriceSeries& series) {
    require_two_ticks(series, "variation_summary");
    const auto& p = series.prices();
    const auto pair = jordan_decompose(series);
    VariationSummary s;
    s.d = p.back() - p.front();
    s.v = total_variation(series).total;
    // Non-negative in exact arithmetic; stray rounding at large price
    // magnitudes may leave a tiny negative residue.
    s.sigma_plus = std::max(0.0, pair.f_plus.back() - pair.f_plus.front());
    s.sigma_minus = std::max(0.0, pair.f_minus.back() - pair.f_minus.front());
    return s;
}

} // namespace tickvar
