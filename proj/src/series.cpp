#include "tickvar/series.hpp"

#include <cmath>

namespace tickvar {

PriceSeries PriceSeries::create(std::vector<std::int64_t> timestamps_ms,
                                std::vector<double> prices) {
    if (prices.empty())
        throw Error(Errc::no_ticks, "series", "series has no ticks");
    if (timestamps_ms.size() != prices.size())
        throw Error(Errc::malformed_row, "series",
                    "timestamp and price columns differ in length");
    for (std::size_t i = 1; i < timestamps_ms.size(); ++i) {
        if (timestamps_ms[i] <= timestamps_ms[i - 1])
            throw Error(Errc::non_monotone_timestamps, "series",
                        "timestamps must be strictly increasing");
    }
    for (double p : prices) {
        if (!std::isfinite(p))
            throw Error(Errc::malformed_row, "series", "prices must be finite");
    }
    return PriceSeries(std::move(timestamps_ms), std::move(prices));
}

} // namespace tickvar
