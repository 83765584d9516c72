#pragma once

#include <istream>
#include <string>

#include "tickvar/series.hpp"

namespace tickvar {

// Reads tick data from UTF-8 CSV with header `timestamp,price`, integer
// epoch-millisecond timestamps and decimal prices. Duplicate timestamps
// collapse to the last-quoted price; decreasing timestamps are an error.
PriceSeries parse_ticks(std::istream& input);

PriceSeries load_ticks(const std::string& path);

} // namespace tickvar
