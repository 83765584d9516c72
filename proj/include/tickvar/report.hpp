#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "tickvar/grid.hpp"
#include "tickvar/series.hpp"
#include "tickvar/shifted.hpp"
#include "tickvar/variation.hpp"

namespace tickvar {

inline constexpr int kSchemaVersion = 1;

enum class AlphaPolicy { error_out, clamp };

struct RunConfig {
    int segment_count = 64;
    int window_segments = 0; // bands only
    double epsilon_rho = 0.5;
    AlphaPolicy alpha_policy = AlphaPolicy::error_out;
    double band_k = 2.0;
    std::uint64_t seed = 0;
    std::string format = "json"; // json | csv

    void validate() const;
};

// Everything the analyze pipeline produces: variation identities, grid
// parameter estimates, both probability variants and the embedded
// cross-checks.
struct AnalysisReport {
    std::string source_file;
    std::size_t tick_count = 0;
    std::int64_t start_ms = 0;
    std::int64_t end_ms = 0;

    int segment_count = 0;
    double epsilon_rho = 0.0;
    AlphaPolicy alpha_policy = AlphaPolicy::error_out;

    GridParams params;              // raw estimates
    double alpha_used = 0.0;        // after optional clamping
    double alpha_signed_used = 0.0;
    bool alpha_clamped = false;
    bool alpha_signed_clamped = false;

    VariationSummary summary;
    double grid_v = 0.0;
    double reconstruction = 0.0; // 2 n lambda rho_bar (1 + alpha1 + alpha2)

    ModelMoments mom; // from the signed alpha
    double p_from_alpha = 0.0;
    double p_from_alpha_signed = 0.0;
    double p_from_moments = 0.0;

    ConditionReport condition;

    bool variation_identities_ok = false;
    bool probability_identity_ok = false;

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
};

AnalysisReport analyze(const PriceSeries& series, const RunConfig& config,
                       const std::string& source_name);

nlohmann::ordered_json error_json(const Error& err);

} // namespace tickvar
