#include "tickvar/errors.hpp"

namespace tickvar {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::empty_file: return "EmptyFile";
        case Errc::malformed_row: return "MalformedRow";
        case Errc::non_monotone_timestamps: return "NonMonotoneTimestamps";
        case Errc::no_ticks: return "NoTicksAtAll";
        case Errc::series_too_short: return "SeriesTooShort";
        case Errc::single_segment: return "SingleSegment";
        case Errc::epsilon_out_of_range: return "EpsilonOutOfRange";
        case Errc::too_large_for_enumeration: return "TooLargeForEnumeration";
        case Errc::window_too_large: return "WindowTooLarge";
        case Errc::no_samples: return "NoSamples";
        case Errc::non_positive_bin_width: return "NonPositiveBinWidth";
        case Errc::zeta0_out_of_range: return "Zeta0OutOfRange";
        case Errc::usage: return "UsageError";
        case Errc::degenerate_grid: return "DegenerateGrid";
        case Errc::alpha_out_of_unit_interval: return "AlphaOutOfUnitInterval";
        case Errc::non_positive_omega: return "NonPositiveOmega";
        case Errc::non_positive_sigma: return "NonPositiveSigma";
        case Errc::singular_system: return "SingularSystem";
        case Errc::outside_monotone_domain: return "OutsideMonotoneDomain";
        case Errc::empty_range: return "EmptyRange";
        case Errc::out_of_range: return "OutOfRange";
    }
    return "UnknownError";
}

bool is_model_error(Errc code) noexcept {
    switch (code) {
        case Errc::degenerate_grid:
        case Errc::alpha_out_of_unit_interval:
        case Errc::non_positive_omega:
        case Errc::non_positive_sigma:
        case Errc::singular_system:
        case Errc::outside_monotone_domain:
        case Errc::empty_range:
        case Errc::out_of_range:
            return true;
        default:
            return false;
    }
}

} // namespace tickvar
