#pragma once

#include <cstdint>
#include <vector>

#include "tickvar/errors.hpp"

namespace tickvar {

// Heavy-tails construction: a zeta-dependent frame shift turns the normal
// law into P(zeta) = Phi(g(zeta)) with
//
//   g(zeta) = zeta - sign(zeta) (zeta^2 - zeta0^2) / 12,   g(0) = 0,
//
// valid on |zeta| <= 6 where g is monotone (g' = 1 - |zeta|/6 >= 0). The
// closed form jumps by zeta0^2 / 6 across zero; the median stays at 1/2.

struct HeavyTailSpec {
    double zeta0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

// Solves C1 + 18 C2 = 3, C1 + (zeta0^2 / 2) C2 = zeta0. Singular at
// zeta0 = 6. Exposed alongside the closed form, which corresponds to
// (C1, C2) = (-zeta0^2 / 12, 1/6) and is normative for heavy_cdf.
HeavyTailSpec solve_constants(double zeta0);

// alpha sqrt(2n) as a function of zeta: -sign(zeta) (C1 + C2 zeta^2 / 2),
// defined as 0 at zeta = 0.
double rfr_shift(double zeta, double c1, double c2);

// Phi(g(zeta)) on |zeta| <= 6 for zeta0 in [0, 1).
double heavy_cdf(double zeta, double zeta0);

// (1 - heavy_cdf(zeta)) / (1 - Phi(zeta)) for 0 < zeta <= 6.
double tail_ratio(double zeta, double zeta0);

struct Zeta0Mode {
    static Zeta0Mode fixed(double value);
    static Zeta0Mode uniform01();

    bool uniform = false;
    double value = 0.0;
};

struct HeavySample {
    std::vector<double> zetas;
    std::size_t clamped = 0; // quantile fell outside g([-6, 6])
};

// Inverse-transform sampling: zeta = g^{-1}(Phi^{-1}(u)) by bisection on
// [-6, 6] to 1e-10; quantiles beyond the range clamp to +/-6 and are
// counted. Deterministic for a fixed seed.
HeavySample sample_heavy(std::size_t count, Zeta0Mode zeta0_mode, std::uint64_t seed);

struct Histogram {
    std::vector<double> edges;          // bin boundaries, size bins + 1
    std::vector<std::int64_t> counts;   // per-bin sample counts
    std::vector<double> model_density;  // counts / (total * width)
    std::vector<double> normal_density; // standard normal pdf at midpoints
};

// Bins covering [-6, 6] with the given width (last bin may extend past 6
// when the width does not divide 12 evenly).
Histogram build_histogram(const std::vector<double>& samples, double bin_width);

} // namespace tickvar
