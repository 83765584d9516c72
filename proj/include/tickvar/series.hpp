#pragma once

#include <cstdint>
#include <vector>

#include "tickvar/errors.hpp"

namespace tickvar {

// Tick prices sampled on T = [a, b]: strictly increasing epoch-millisecond
// timestamps paired with finite prices. Immutable after construction.
class PriceSeries {
public:
    static PriceSeries create(std::vector<std::int64_t> timestamps_ms,
                              std::vector<double> prices);

    std::size_t size() const noexcept { return prices_.size(); }
    std::int64_t start_ms() const noexcept { return timestamps_.front(); }
    std::int64_t end_ms() const noexcept { return timestamps_.back(); }
    std::int64_t span_ms() const noexcept { return end_ms() - start_ms(); }

    const std::vector<std::int64_t>& timestamps() const noexcept { return timestamps_; }
    const std::vector<double>& prices() const noexcept { return prices_; }

private:
    PriceSeries(std::vector<std::int64_t> t, std::vector<double> p)
        : timestamps_(std::move(t)), prices_(std::move(p)) {}

    std::vector<std::int64_t> timestamps_;
    std::vector<double> prices_;
};

} // namespace tickvar
