#include "tickvar/heavy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tickvar/normal.hpp"

namespace tickvar {

namespace {

constexpr double kDomain = 6.0;       // g' vanishes at |zeta| = 6
constexpr double kBisectTol = 1e-10;

void require_zeta0(double zeta0) {
    if (!(zeta0 >= 0.0 && zeta0 < 1.0))
        throw Error(Errc::zeta0_out_of_range, "heavy", "zeta0 must lie in [0, 1)");
}

// g(zeta) = zeta - sign(zeta) (zeta^2 - zeta0^2) / 12, spelled through the
// shift route so the two stay bit-identical.
double g_shift(double zeta, double zeta0) {
    return zeta + rfr_shift(zeta, -zeta0 * zeta0 / 12.0, 1.0 / 6.0);
}

// Uniform doubles built from raw mt19937_64 words so output does not depend
// on the standard library's distribution implementation.
double uniform_closed_open(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53; // [0, 1)
}

double uniform_open(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; // (0, 1)
}

} // namespace

HeavyTailSpec solve_constants(double zeta0) {
    const double pivot = 18.0 - zeta0 * zeta0 / 2.0;
    if (pivot == 0.0)
        throw Error(Errc::singular_system, "heavy",
                    "constant system is singular at zeta0 = 6");
    HeavyTailSpec spec;
    spec.zeta0 = zeta0;
    spec.c2 = (3.0 - zeta0) / pivot;
    spec.c1 = 3.0 - 18.0 * spec.c2;
    return spec;
}

double rfr_shift(double zeta, double c1, double c2) {
    if (zeta == 0.0)
        return 0.0;
    const double sign = zeta > 0.0 ? 1.0 : -1.0;
    return -sign * (c1 + c2 * zeta * zeta / 2.0);
}

double heavy_cdf(double zeta, double zeta0) {
    require_zeta0(zeta0);
    if (std::abs(zeta) > kDomain)
        throw Error(Errc::outside_monotone_domain, "heavy",
                    "the closed form is a CDF only on |zeta| <= 6");
    return normal_cdf(g_shift(zeta, zeta0));
}

double tail_ratio(double zeta, double zeta0) {
    if (!(zeta > 0.0))
        throw Error(Errc::usage, "heavy", "tail_ratio needs zeta > 0");
    return (1.0 - heavy_cdf(zeta, zeta0)) / (1.0 - normal_cdf(zeta));
}

Zeta0Mode Zeta0Mode::fixed(double value) {
    require_zeta0(value);
    return Zeta0Mode{false, value};
}

Zeta0Mode Zeta0Mode::uniform01() {
    return Zeta0Mode{true, 0.0};
}

HeavySample sample_heavy(std::size_t count, Zeta0Mode zeta0_mode, std::uint64_t seed) {
    if (count < 1)
        throw Error(Errc::no_samples, "heavy", "sample count must be >= 1");
    if (!zeta0_mode.uniform)
        require_zeta0(zeta0_mode.value);

    std::mt19937_64 rng(seed);
    HeavySample result;
    result.zetas.resize(count);

    for (auto& zeta : result.zetas) {
        const double zeta0 = zeta0_mode.uniform ? uniform_closed_open(rng) : zeta0_mode.value;
        const double target = normal_quantile(uniform_open(rng));

        if (target >= g_shift(kDomain, zeta0)) {
            zeta = kDomain;
            ++result.clamped;
            continue;
        }
        if (target <= g_shift(-kDomain, zeta0)) {
            zeta = -kDomain;
            ++result.clamped;
            continue;
        }
        // Quantiles inside the jump of g across zero belong to the atom at
        // zeta = 0 (the near-zero anomaly).
        if (std::abs(target) <= zeta0 * zeta0 / 12.0) {
            zeta = 0.0;
            continue;
        }

        double lo = -kDomain, hi = kDomain;
        while (hi - lo > kBisectTol) {
            const double mid = 0.5 * (lo + hi);
            if (g_shift(mid, zeta0) < target)
                lo = mid;
            else
                hi = mid;
        }
        zeta = 0.5 * (lo + hi);
    }
    return result;
}

Histogram build_histogram(const std::vector<double>& samples, double bin_width) {
    if (samples.empty())
        throw Error(Errc::no_samples, "heavy", "histogram needs at least 1 sample");
    if (!(bin_width > 0.0))
        throw Error(Errc::non_positive_bin_width, "heavy", "bin width must be positive");

    const int bins = std::max(1, static_cast<int>(std::ceil(2.0 * kDomain / bin_width)));
    Histogram hist;
    hist.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i)
        hist.edges[static_cast<std::size_t>(i)] = -kDomain + bin_width * i;
    hist.counts.assign(static_cast<std::size_t>(bins), 0);

    for (double x : samples) {
        int idx = static_cast<int>(std::floor((x + kDomain) / bin_width));
        idx = std::clamp(idx, 0, bins - 1);
        ++hist.counts[static_cast<std::size_t>(idx)];
    }

    const double total = static_cast<double>(samples.size());
    hist.model_density.resize(static_cast<std::size_t>(bins));
    hist.normal_density.resize(static_cast<std::size_t>(bins));
    for (int i = 0; i < bins; ++i) {
        const auto u = static_cast<std::size_t>(i);
        const double mid = 0.5 * (hist.edges[u] + hist.edges[u + 1]);
        hist.model_density[u] = static_cast<double>(hist.counts[u]) / (total * bin_width);
        hist.normal_density[u] = normal_pdf(mid);
    }
    return hist;
}

} // namespace tickvar
