#pragma once

#include <stdexcept>
#include <string>

namespace tickvar {

// Failure codes for the whole library. The CLI maps them onto its exit
// contract: model violations exit with 1, input/usage problems with 2.
enum class Errc {
    // input / usage
    empty_file,
    malformed_row,
    non_monotone_timestamps,
    no_ticks,
    series_too_short,
    single_segment,
    epsilon_out_of_range,
    too_large_for_enumeration,
    window_too_large,
    no_samples,
    non_positive_bin_width,
    zeta0_out_of_range,
    usage,
    // model / domain
    degenerate_grid,
    alpha_out_of_unit_interval,
    non_positive_omega,
    non_positive_sigma,
    singular_system,
    outside_monotone_domain,
    empty_range,
    out_of_range,
};

const char* errc_name(Errc code) noexcept;

// True for violations of the model's domain (as opposed to bad input).
bool is_model_error(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string component, const std::string& message)
        : std::runtime_error(message), code_(code), component_(std::move(component)) {}

    Errc code() const noexcept { return code_; }
    const std::string& component() const noexcept { return component_; }

private:
    Errc code_;
    std::string component_;
};

} // namespace tickvar
