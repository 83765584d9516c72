#pragma once

#include <cstdint>
#include <vector>

#include "tickvar/series.hpp"

namespace tickvar {

// Uniform time partition of a tick series into n+1 elementary segments
// (n adjacent pairs) with per-segment oscillation statistics, plus the
// parameter estimates of the variation decomposition
//
//   V = 2 n lambda rho_bar (1 + alpha1 + alpha2).

struct SegmentStats {
    int index = 0;
    double high = 0.0;  // sup of prices inside the segment (M_k)
    double low = 0.0;   // inf of prices inside the segment (m_k)
    double close = 0.0; // last price in the segment (carried over when empty)
    double rho = 0.0;   // oscillation / lambda, in [0, 1]; 0 for a flat grid

    double oscillation() const noexcept { return high - low; }
};

class SegmentGrid {
public:
    // Divides [a, b] into segment_count equal-width intervals (half-open,
    // last closed). A segment without ticks inherits high = low = close of
    // the previous non-empty segment.
    static SegmentGrid build(const PriceSeries& series, int segment_count);

    const std::vector<SegmentStats>& segments() const noexcept { return segments_; }
    std::size_t size() const noexcept { return segments_.size(); }
    int pair_count() const noexcept { return static_cast<int>(segments_.size()) - 1; }
    double lambda() const noexcept { return lambda_; } // max oscillation
    double width_ms() const noexcept { return width_ms_; }
    std::int64_t start_ms() const noexcept { return start_ms_; }

    // Right edge of segment `index` as an epoch-millisecond timestamp.
    std::int64_t segment_end_ms(int index) const;

    // Sub-grid of `count` consecutive segments starting at `first`, with
    // indices and densities recomputed for the slice.
    SegmentGrid slice(int first, int count) const;

private:
    SegmentGrid() = default;
    void assign_densities();

    std::vector<SegmentStats> segments_;
    double lambda_ = 0.0;
    double width_ms_ = 0.0;
    std::int64_t start_ms_ = 0;
};

// max(M_prev, M_next) - min(m_prev, m_next): the variation contribution of
// one adjacent pair. Equals the half-sum form
// (w_prev + w_next + |M_prev - M_next| + |m_prev - m_next|) / 2.
double pair_increment(const SegmentStats& prev, const SegmentStats& next);

// min(|M_next - m_prev|, |M_prev - m_next|) >= 0: the shift of two adjacent
// oscillation boxes relative to each other.
double min_shift(const SegmentStats& prev, const SegmentStats& next);

// V = sum over pairs of (w_prev + w_next) + sum over pairs of min_shift.
double grid_variation(const SegmentGrid& grid);

struct GridParams {
    int n = 0;                  // number of adjacent pairs
    double lambda = 0.0;        // oscillation bound, max over segments
    double rho_bar = 0.0;       // mean density over all n+1 segments
    double alpha1 = 0.0;        // (rho_0 - rho_n) / (2 n rho_bar)
    double alpha2 = 0.0;        // sum of min_shift / (2 n lambda rho_bar), >= 0
    double alpha2_signed = 0.0; // same sum with midpoint-transition signs
    double alpha = 0.0;         // alpha1 + alpha2
    double alpha_signed = 0.0;  // alpha1 + alpha2_signed
    double omega = 0.0;         // average oscillation lambda * rho_bar
};

GridParams estimate_params(const SegmentGrid& grid);

struct ConditionReport {
    double epsilon_rho = 0.0;
    int violations = 0;
    double fraction = 0.0; // violations / n
};

// Counts adjacent pairs violating |rho_k - rho_{k-1}| < epsilon_rho.
ConditionReport check_density_condition(const SegmentGrid& grid, double epsilon_rho);

} // namespace tickvar
