#include "tickvar/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tickvar {

SegmentGrid SegmentGrid::build(const PriceSeries& series, int segment_count) {
    if (series.size() < 2)
        throw Error(Errc::series_too_short, "grid", "grid needs at least 2 ticks");
    if (segment_count < 1)
        throw Error(Errc::usage, "grid", "segment count must be >= 1");

    SegmentGrid grid;
    grid.start_ms_ = series.start_ms();
    grid.width_ms_ = static_cast<double>(series.span_ms()) / segment_count;
    grid.segments_.resize(segment_count);
    for (int k = 0; k < segment_count; ++k) {
        grid.segments_[k].index = k;
        grid.segments_[k].high = -std::numeric_limits<double>::infinity();
        grid.segments_[k].low = std::numeric_limits<double>::infinity();
    }

    const auto& ts = series.timestamps();
    const auto& ps = series.prices();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto rel = static_cast<double>(ts[i] - grid.start_ms_);
        int k = std::min(segment_count - 1, static_cast<int>(rel / grid.width_ms_));
        auto& seg = grid.segments_[k];
        seg.high = std::max(seg.high, ps[i]);
        seg.low = std::min(seg.low, ps[i]);
        seg.close = ps[i]; // ticks arrive in time order
    }

    // Empty segments inherit the previous close as a zero-width box.
    if (!std::isfinite(grid.segments_[0].high))
        throw Error(Errc::no_ticks, "grid", "leading segment contains no ticks");
    for (int k = 1; k < segment_count; ++k) {
        auto& seg = grid.segments_[k];
        if (!std::isfinite(seg.high)) {
            double carry = grid.segments_[k - 1].close;
            seg.high = seg.low = seg.close = carry;
        }
    }

    grid.assign_densities();
    return grid;
}

void SegmentGrid::assign_densities() {
    lambda_ = 0.0;
    for (const auto& seg : segments_)
        lambda_ = std::max(lambda_, seg.oscillation());
    for (auto& seg : segments_)
        seg.rho = lambda_ > 0.0 ? seg.oscillation() / lambda_ : 0.0;
}

std::int64_t SegmentGrid::segment_end_ms(int index) const {
    return start_ms_ + static_cast<std::int64_t>(std::llround(width_ms_ * (index + 1)));
}

SegmentGrid SegmentGrid::slice(int first, int count) const {
    if (first < 0 || count < 1 || first + count > static_cast<int>(segments_.size()))
        throw Error(Errc::out_of_range, "grid", "slice outside grid bounds");
    SegmentGrid sub;
    sub.width_ms_ = width_ms_;
    sub.start_ms_ = start_ms_ + static_cast<std::int64_t>(std::llround(width_ms_ * first));
    sub.segments_.assign(segments_.begin() + first, segments_.begin() + first + count);
    for (int k = 0; k < count; ++k)
        sub.segments_[k].index = k;
    sub.assign_densities();
    return sub;
}

double pair_increment(const SegmentStats& prev, const SegmentStats& next) {
    return std::max(prev.high, next.high) - std::min(prev.low, next.low);
}

double min_shift(const SegmentStats& prev, const SegmentStats& next) {
    return std::min(std::abs(next.high - prev.low), std::abs(prev.high - next.low));
}

double grid_variation(const SegmentGrid& grid) {
    if (grid.size() < 2)
        throw Error(Errc::single_segment, "grid", "variation needs at least 2 segments");
    const auto& segs = grid.segments();
    double v = 0.0;
    for (std::size_t k = 1; k < segs.size(); ++k) {
        v += segs[k - 1].oscillation() + segs[k].oscillation();
        v += min_shift(segs[k - 1], segs[k]);
    }
    return v;
}

GridParams estimate_params(const SegmentGrid& grid) {
    if (grid.size() < 2)
        throw Error(Errc::single_segment, "grid", "estimation needs at least 2 segments");
    if (grid.lambda() <= 0.0)
        throw Error(Errc::degenerate_grid, "grid",
                    "all segment oscillations are zero, lambda undefined");

    const auto& segs = grid.segments();
    GridParams p;
    p.n = grid.pair_count();
    p.lambda = grid.lambda();

    double rho_sum = 0.0;
    for (const auto& seg : segs)
        rho_sum += seg.rho;
    p.rho_bar = rho_sum / static_cast<double>(segs.size());

    double shift_sum = 0.0;
    double shift_signed = 0.0;
    for (std::size_t k = 1; k < segs.size(); ++k) {
        double ms = min_shift(segs[k - 1], segs[k]);
        shift_sum += ms;
        // Midpoint-down transitions count as positive drift of alpha.
        double mid_step = (segs[k - 1].high + segs[k - 1].low) - (segs[k].high + segs[k].low);
        if (mid_step > 0.0)
            shift_signed += ms;
        else if (mid_step < 0.0)
            shift_signed -= ms;
    }

    double denom = 2.0 * p.n * p.rho_bar;
    p.alpha1 = (segs.front().rho - segs.back().rho) / denom;
    p.alpha2 = shift_sum / (denom * p.lambda);
    p.alpha2_signed = shift_signed / (denom * p.lambda);
    p.alpha = p.alpha1 + p.alpha2;
    p.alpha_signed = p.alpha1 + p.alpha2_signed;
    p.omega = p.lambda * p.rho_bar;
    return p;
}

ConditionReport check_density_condition(const SegmentGrid& grid, double epsilon_rho) {
    if (!(epsilon_rho > 0.0 && epsilon_rho < 1.0))
        throw Error(Errc::epsilon_out_of_range, "grid",
                    "epsilon_rho must lie strictly between 0 and 1");
    if (grid.size() < 2)
        throw Error(Errc::single_segment, "grid", "condition needs at least 2 segments");
    if (grid.lambda() <= 0.0)
        throw Error(Errc::degenerate_grid, "grid",
                    "all segment oscillations are zero, lambda undefined");

    const auto& segs = grid.segments();
    ConditionReport report;
    report.epsilon_rho = epsilon_rho;
    for (std::size_t k = 1; k < segs.size(); ++k) {
        if (!(std::abs(segs[k].rho - segs[k - 1].rho) < epsilon_rho))
            ++report.violations;
    }
    report.fraction = static_cast<double>(report.violations) / grid.pair_count();
    return report;
}

} // namespace tickvar
