#include "tickvar/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

namespace tickvar {

namespace {

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
    throw Error(Errc::malformed_row, "io",
                "line " + std::to_string(line_no) + ": " + why);
}

} // namespace

PriceSeries parse_ticks(std::istream& input) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(input, line))
        throw Error(Errc::empty_file, "io", "input is empty");
    ++line_no;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "timestamp,price")
        malformed(line_no, "expected header 'timestamp,price'");

    std::vector<std::int64_t> timestamps;
    std::vector<double> prices;

    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;

        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            malformed(line_no, "expected exactly two comma-separated fields");

        std::int64_t ts = 0;
        const char* ts_begin = line.data();
        const char* ts_end = line.data() + comma;
        auto ts_result = std::from_chars(ts_begin, ts_end, ts);
        if (ts_result.ec != std::errc{} || ts_result.ptr != ts_end)
            malformed(line_no, "timestamp is not an integer");

        double price = 0.0;
        const char* px_begin = line.data() + comma + 1;
        const char* px_end = line.data() + line.size();
        auto px_result = std::from_chars(px_begin, px_end, price);
        if (px_result.ec != std::errc{} || px_result.ptr != px_end)
            malformed(line_no, "price is not a number");
        if (!std::isfinite(price))
            malformed(line_no, "price must be finite");

        if (!timestamps.empty()) {
            if (ts < timestamps.back())
                throw Error(Errc::non_monotone_timestamps, "io",
                            "line " + std::to_string(line_no) +
                                ": timestamp decreases");
            if (ts == timestamps.back()) {
                prices.back() = price; // last quote wins
                continue;
            }
        }
        timestamps.push_back(ts);
        prices.push_back(price);
    }

    if (timestamps.empty())
        throw Error(Errc::empty_file, "io", "no data rows after the header");

    return PriceSeries::create(std::move(timestamps), std::move(prices));
}

PriceSeries load_ticks(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error(Errc::usage, "io", "cannot open '" + path + "'");
    return parse_ticks(file);
}

} // namespace tickvar
