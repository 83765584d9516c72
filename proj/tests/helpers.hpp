#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tickvar/series.hpp"

namespace testutil {

// Series with timestamps 0, 1, 2, ... for price-only cases.
inline tickvar::PriceSeries make_series(std::vector<double> prices) {
    std::vector<std::int64_t> ts(prices.size());
    std::iota(ts.begin(), ts.end(), 0);
    return tickvar::PriceSeries::create(std::move(ts), std::move(prices));
}

inline tickvar::PriceSeries make_series(std::vector<std::int64_t> timestamps,
                                        std::vector<double> prices) {
    return tickvar::PriceSeries::create(std::move(timestamps), std::move(prices));
}

inline std::vector<double> random_prices(std::mt19937_64& rng, std::size_t length,
                                         double lo = 0.0, double hi = 1e6) {
    std::vector<double> prices(length);
    for (auto& p : prices)
        p = lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    return prices;
}

// 30 ticks in three boxes (10,8), (13,11), (16,14); with 3 segments this is
// the staircase grid with lambda = 2, all densities 1 and min shifts 1, 1.
inline tickvar::PriceSeries staircase_series() {
    std::vector<std::int64_t> ts(30);
    std::iota(ts.begin(), ts.end(), 0);
    std::vector<double> prices;
    for (int box = 0; box < 3; ++box) {
        const double high = 10.0 + 3.0 * box;
        const double low = 8.0 + 3.0 * box;
        for (int i = 0; i < 10; ++i)
            prices.push_back(i % 3 == 0 ? high : (i % 3 == 1 ? low : low + 1.0));
    }
    return tickvar::PriceSeries::create(std::move(ts), std::move(prices));
}

} // namespace testutil
