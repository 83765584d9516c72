#pragma once

#include <cstdint>
#include <vector>

#include "tickvar/grid.hpp"
#include "tickvar/series.hpp"

namespace tickvar {

// The alpha != 0 frame shift: admissible differences, the primed-variable
// substitution, the directional probability P(zeta <= 0), the moments of D,
// rolling forecast bands, and a path simulator reproducing those moments.

struct IntRange {
    long long lo = 0;
    long long hi = 0;
    long long count() const noexcept { return hi - lo + 1; }
};

// Integers z satisfying |2z - z0| <= 2n - |z0|.
IntRange admissible_range(int n, long long z0);

struct FrameShift {
    int n = 0;
    long long z0 = 0;
    long long doubled_z_prime = 0; // 2z' = 2z - z0
    long long doubled_n_prime = 0; // 2n' = 2n - |z0|
};

FrameShift shift_frame(long long z, int n, long long z0);

// zeta' = (zeta + alpha sqrt(2n)) / sqrt(1 - |alpha|).
double zeta_prime(double zeta, double alpha, int n);

// P(zeta <= 0) = Phi(alpha sqrt(2n) / sqrt(1 - |alpha|)).
double p_leq_zero(double alpha, int n);

struct ModelMoments {
    double mu = 0.0;          // mean of D, price units
    double sigma = 0.0;       // standard deviation of D, price units
    double mu_omega = 0.0;    // mu / omega = -2 n alpha
    double sigma_omega = 0.0; // sigma / omega = sqrt(2 n (1 - |alpha|))
};

ModelMoments moments(double alpha, int n, double omega);

// P(zeta <= 0) = Phi(-mu / sigma).
double p_leq_zero_from_moments(double mu, double sigma);

struct BandPoint {
    std::int64_t timestamp_ms = 0; // right edge of the window
    double center = 0.0;           // last window price + mu
    double upper = 0.0;            // center + k sigma
    double lower = 0.0;            // center - k sigma
    double k = 0.0;
    double violation_fraction = 0.0; // density-condition violations in the window
};

// Slides a window of window_segments consecutive segments (one segment per
// step) over a grid of total_segments; per window estimates parameters
// (signed alpha, clamped into the unit interval) and emits the forecast
// interval center +/- k sigma.
std::vector<BandPoint> rolling_bands(const PriceSeries& series, int total_segments,
                                     int window_segments, double k, double epsilon_rho);

struct SimulationPlan {
    long long z0 = 0;            // round(-2 n alpha)
    long long steps = 0;         // 2n' = 2n - |z0| fair unit steps
    double realized_alpha = 0.0; // -z0 / (2n) after rounding
};

SimulationPlan plan_simulation(int n, double alpha);

// Samples of D: omega * (z0 + S) with S the signed sum of `steps` fair +/-1
// steps. Deterministic for a fixed seed.
std::vector<double> simulate_differences(int n, double alpha, double omega,
                                         std::size_t count, std::uint64_t seed);

// Largest |alpha| accepted by the unit-interval operations when clamping.
inline constexpr double kAlphaClampLimit = 1.0 - 1e-9;

double clamp_alpha(double alpha);

} // namespace tickvar
