#include "tickvar/shifted.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tickvar/normal.hpp"

namespace tickvar {

namespace {

void require_unit_alpha(double alpha) {
    if (!(alpha > -1.0 && alpha < 1.0))
        throw Error(Errc::alpha_out_of_unit_interval, "shifted",
                    "alpha must lie strictly inside (-1, 1); pass --clamp to pull "
                    "estimates to +/-(1 - 1e-9)");
}

void require_positive_n(int n) {
    if (n < 1)
        throw Error(Errc::usage, "shifted", "n must be >= 1");
}

} // namespace

double clamp_alpha(double alpha) {
    return std::clamp(alpha, -kAlphaClampLimit, kAlphaClampLimit);
}

IntRange admissible_range(int n, long long z0) {
    require_positive_n(n);
    const long long span = 2LL * n - std::llabs(z0);
    if (span < 0)
        throw Error(Errc::empty_range, "shifted",
                    "|z0| exceeds 2n, no admissible differences");
    // ceil((z0 - span)/2) .. floor((z0 + span)/2); >> floors in C++20.
    return IntRange{(z0 - span + 1) >> 1, (z0 + span) >> 1};
}

FrameShift shift_frame(long long z, int n, long long z0) {
    const IntRange range = admissible_range(n, z0);
    if (z < range.lo || z > range.hi)
        throw Error(Errc::out_of_range, "shifted", "z outside the admissible range");
    FrameShift shift;
    shift.n = n;
    shift.z0 = z0;
    shift.doubled_z_prime = 2 * z - z0;
    shift.doubled_n_prime = 2LL * n - std::llabs(z0);
    return shift;
}

double zeta_prime(double zeta, double alpha, int n) {
    require_positive_n(n);
    require_unit_alpha(alpha);
    return (zeta + alpha * std::sqrt(2.0 * n)) / std::sqrt(1.0 - std::abs(alpha));
}

double p_leq_zero(double alpha, int n) {
    require_positive_n(n);
    require_unit_alpha(alpha);
    return normal_cdf(alpha * std::sqrt(2.0 * n) / std::sqrt(1.0 - std::abs(alpha)));
}

ModelMoments moments(double alpha, int n, double omega) {
    require_positive_n(n);
    require_unit_alpha(alpha);
    if (!(omega > 0.0))
        throw Error(Errc::non_positive_omega, "shifted", "omega must be positive");
    ModelMoments m;
    m.mu_omega = -2.0 * n * alpha;
    m.sigma_omega = std::sqrt(2.0 * n * (1.0 - std::abs(alpha)));
    m.mu = m.mu_omega * omega;
    m.sigma = m.sigma_omega * omega;
    return m;
}

double p_leq_zero_from_moments(double mu, double sigma) {
    if (!(sigma > 0.0))
        throw Error(Errc::non_positive_sigma, "shifted", "sigma must be positive");
    return normal_cdf(-mu / sigma);
}

std::vector<BandPoint> rolling_bands(const PriceSeries& series, int total_segments,
                                     int window_segments, double k, double epsilon_rho) {
    if (k < 0.0)
        throw Error(Errc::usage, "shifted", "band width multiplier k must be >= 0");
    if (window_segments < 2)
        throw Error(Errc::single_segment, "shifted",
                    "a window needs at least 2 segments");
    if (window_segments > total_segments)
        throw Error(Errc::window_too_large, "shifted",
                    "window exceeds the number of segments");

    const SegmentGrid grid = SegmentGrid::build(series, total_segments);
    std::vector<BandPoint> points;
    points.reserve(static_cast<std::size_t>(total_segments - window_segments + 1));

    for (int first = 0; first + window_segments <= total_segments; ++first) {
        const SegmentGrid window = grid.slice(first, window_segments);
        const GridParams params = estimate_params(window);
        const ConditionReport condition = check_density_condition(window, epsilon_rho);

        const double alpha = clamp_alpha(params.alpha_signed);
        const ModelMoments m = moments(alpha, params.n, params.omega);

        BandPoint point;
        point.timestamp_ms = grid.segment_end_ms(first + window_segments - 1);
        point.center = window.segments().back().close + m.mu;
        point.upper = point.center + k * m.sigma;
        point.lower = point.center - k * m.sigma;
        point.k = k;
        point.violation_fraction = condition.fraction;
        points.push_back(point);
    }
    return points;
}

SimulationPlan plan_simulation(int n, double alpha) {
    require_positive_n(n);
    require_unit_alpha(alpha);
    SimulationPlan plan;
    plan.z0 = std::llround(-2.0 * n * alpha);
    plan.steps = 2LL * n - std::llabs(plan.z0);
    plan.realized_alpha = -static_cast<double>(plan.z0) / (2.0 * n);
    return plan;
}

std::vector<double> simulate_differences(int n, double alpha, double omega,
                                         std::size_t count, std::uint64_t seed) {
    if (!(omega > 0.0))
        throw Error(Errc::non_positive_omega, "shifted", "omega must be positive");
    if (count < 1)
        throw Error(Errc::no_samples, "shifted", "sample count must be >= 1");
    const SimulationPlan plan = plan_simulation(n, alpha);

    std::mt19937_64 rng(seed);
    std::vector<double> samples(count);
    for (auto& sample : samples) {
        long long sum = 0;
        for (long long step = 0; step < plan.steps; ++step)
            sum += (rng() >> 63) ? 1 : -1;
        sample = omega * static_cast<double>(plan.z0 + sum);
    }
    return samples;
}

} // namespace tickvar
