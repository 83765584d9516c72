#include "tickvar/counting.hpp"

#include <bit>
#include <cstdint>

namespace tickvar {

namespace {

const BigInt kZero = 0;

void require_positive_n(int n) {
    if (n < 1)
        throw Error(Errc::usage, "counting", "n must be >= 1");
}

// count * 2^(-two_n) without overflowing double for wide rows: keep the top
// ~1000 bits, fold the rest into the exponent.
double prob_from_count(const BigInt& count, int two_n) {
    if (count == 0)
        return 0.0;
    const auto bits = boost::multiprecision::msb(count);
    int shift = 0;
    if (bits > 1000) {
        shift = static_cast<int>(bits) - 1000;
        return std::ldexp(BigInt(count >> shift).convert_to<double>(), shift - two_n);
    }
    return std::ldexp(count.convert_to<double>(), -two_n);
}

} // namespace

CountDistribution::CountDistribution(int n, std::vector<BigInt> counts,
                                     std::vector<double> probabilities)
    : n_(n), counts_(std::move(counts)), probabilities_(std::move(probabilities)) {}

const BigInt& CountDistribution::count(int z) const {
    if (z < -n_ || z > n_)
        return kZero;
    if (counts_.empty())
        throw Error(Errc::usage, "counting",
                    "exact counts not materialized above the cap");
    return counts_[static_cast<std::size_t>(z + n_)];
}

double CountDistribution::probability(int z) const {
    if (z < -n_ || z > n_)
        return 0.0;
    return probabilities_[static_cast<std::size_t>(z + n_)];
}

BigInt exact_count(int n, int z) {
    require_positive_n(n);
    if (z < -n || z > n)
        return 0;
    // C(2n, k) by the multiplicative formula; every division is exact.
    int k = z + n;
    k = std::min(k, 2 * n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= 2 * n - k + i;
        result /= i;
    }
    return result;
}

CountDistribution distribution(int n, int exact_cap) {
    require_positive_n(n);
    const std::size_t m = static_cast<std::size_t>(2 * n + 1);
    std::vector<double> probs(m);

    if (n <= exact_cap) {
        // Row of Pascal's triangle via the ratio recurrence; exact integers,
        // probabilities recovered as count * 2^(-2n).
        std::vector<BigInt> counts(m);
        counts[0] = 1;
        for (int k = 0; k < 2 * n; ++k)
            counts[k + 1] = counts[k] * (2 * n - k) / (k + 1);
        for (std::size_t i = 0; i < m; ++i)
            probs[i] = prob_from_count(counts[i], 2 * n);
        return CountDistribution(n, std::move(counts), std::move(probs));
    }

    const double log_total = 2.0 * n * std::log(2.0);
    const double lg2n = std::lgamma(2.0 * n + 1.0);
    for (int z = -n; z <= n; ++z) {
        double lp = lg2n - std::lgamma(static_cast<double>(z + n) + 1.0) -
                    std::lgamma(static_cast<double>(n - z) + 1.0) - log_total;
        probs[static_cast<std::size_t>(z + n)] = std::exp(lp);
    }
    return CountDistribution(n, {}, std::move(probs));
}

double gaussian_approx(int n, int z) {
    require_positive_n(n);
    const double zz = static_cast<double>(z) * z;
    return std::exp(-zz / n) / std::sqrt(M_PI * n);
}

CountDistribution enumerate_paths(int n) {
    require_positive_n(n);
    if (n > 12)
        throw Error(Errc::too_large_for_enumeration, "counting",
                    "enumeration is capped at n <= 12 (2^(2n) sequences)");

    const int bits = 2 * n;
    std::vector<std::uint64_t> raw(static_cast<std::size_t>(bits + 1), 0);
    const std::uint64_t total = std::uint64_t{1} << bits;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        ++raw[static_cast<std::size_t>(std::popcount(mask))];

    // popcount u gives the signed sum 2u - 2n = 2z, so z = u - n.
    std::vector<BigInt> counts(raw.size());
    std::vector<double> probs(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        counts[i] = raw[i];
        probs[i] = std::ldexp(static_cast<double>(raw[i]), -bits);
    }
    return CountDistribution(n, std::move(counts), std::move(probs));
}

} // namespace tickvar
