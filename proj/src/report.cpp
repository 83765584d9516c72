#include "tickvar/report.hpp"

#include <cmath>
#include <sstream>

namespace tickvar {

namespace {

double normalized_gap(double lhs, double rhs, double scale) {
    return std::abs(lhs - rhs) / std::max(1.0, scale);
}

// One clamp step shared by both alpha variants.
double apply_policy(double alpha, AlphaPolicy policy, bool& clamped, const char* label) {
    if (alpha > -1.0 && alpha < 1.0)
        return alpha;
    if (policy == AlphaPolicy::error_out)
        throw Error(Errc::alpha_out_of_unit_interval, "report",
                    std::string(label) + " = " + std::to_string(alpha) +
                        " lies outside (-1, 1); pass --clamp to pull it to "
                        "+/-(1 - 1e-9)");
    clamped = true;
    return clamp_alpha(alpha);
}

} // namespace

void RunConfig::validate() const {
    if (segment_count < 1)
        throw Error(Errc::usage, "report", "segment count must be >= 1");
    if (!(epsilon_rho > 0.0 && epsilon_rho < 1.0))
        throw Error(Errc::epsilon_out_of_range, "report",
                    "epsilon_rho must lie strictly between 0 and 1");
    if (band_k < 0.0)
        throw Error(Errc::usage, "report", "band width multiplier k must be >= 0");
    if (format != "json" && format != "csv")
        throw Error(Errc::usage, "report", "format must be json or csv");
}

AnalysisReport analyze(const PriceSeries& series, const RunConfig& config,
                       const std::string& source_name) {
    config.validate();

    AnalysisReport report;
    report.source_file = source_name;
    report.tick_count = series.size();
    report.start_ms = series.start_ms();
    report.end_ms = series.end_ms();
    report.segment_count = config.segment_count;
    report.epsilon_rho = config.epsilon_rho;
    report.alpha_policy = config.alpha_policy;

    report.summary = variation_summary(series);

    const SegmentGrid grid = SegmentGrid::build(series, config.segment_count);
    report.params = estimate_params(grid);
    report.grid_v = grid_variation(grid);
    report.reconstruction = 2.0 * report.params.n * report.params.lambda *
                            report.params.rho_bar *
                            (1.0 + report.params.alpha1 + report.params.alpha2);
    report.condition = check_density_condition(grid, config.epsilon_rho);

    report.alpha_used =
        apply_policy(report.params.alpha, config.alpha_policy, report.alpha_clamped, "alpha");
    report.alpha_signed_used = apply_policy(report.params.alpha_signed, config.alpha_policy,
                                            report.alpha_signed_clamped, "signed alpha");

    report.mom = moments(report.alpha_signed_used, report.params.n, report.params.omega);
    report.p_from_alpha = p_leq_zero(report.alpha_used, report.params.n);
    report.p_from_alpha_signed = p_leq_zero(report.alpha_signed_used, report.params.n);
    report.p_from_moments = p_leq_zero_from_moments(report.mom.mu, report.mom.sigma);

    const auto& s = report.summary;
    report.variation_identities_ok =
        normalized_gap(s.sigma_plus - s.sigma_minus, s.d, s.v) < 1e-9 &&
        normalized_gap(s.sigma_plus + s.sigma_minus, s.v, s.v) < 1e-9 &&
        normalized_gap(s.sigma_plus * s.sigma_minus, (s.v * s.v - s.d * s.d) / 4.0,
                       s.v * s.v) < 1e-9;
    report.probability_identity_ok =
        std::abs(report.p_from_alpha_signed - report.p_from_moments) < 1e-12;

    return report;
}

nlohmann::ordered_json AnalysisReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["source"] = {{"file", source_file},
                   {"ticks", tick_count},
                   {"start_ms", start_ms},
                   {"end_ms", end_ms}};
    j["config"] = {{"segments", segment_count},
                   {"epsilon_rho", epsilon_rho},
                   {"alpha_policy", alpha_policy == AlphaPolicy::clamp ? "clamp" : "error"}};
    j["grid"] = {{"n", params.n},
                 {"lambda", params.lambda},
                 {"rho_bar", params.rho_bar},
                 {"alpha1", params.alpha1},
                 {"alpha2", params.alpha2},
                 {"alpha2_signed", params.alpha2_signed},
                 {"alpha", params.alpha},
                 {"alpha_signed", params.alpha_signed},
                 {"omega", params.omega},
                 {"alpha_used", alpha_used},
                 {"alpha_signed_used", alpha_signed_used},
                 {"alpha_clamped", alpha_clamped},
                 {"alpha_signed_clamped", alpha_signed_clamped}};
    j["variation"] = {{"d", summary.d},
                      {"v", summary.v},
                      {"sigma_plus", summary.sigma_plus},
                      {"sigma_minus", summary.sigma_minus},
                      {"grid_v", grid_v},
                      {"reconstruction", reconstruction}};
    j["moments"] = {{"mu", mom.mu},
                    {"sigma", mom.sigma},
                    {"mu_omega", mom.mu_omega},
                    {"sigma_omega", mom.sigma_omega}};
    j["probability"] = {{"p_leq_zero_alpha", p_from_alpha},
                        {"p_leq_zero_alpha_signed", p_from_alpha_signed},
                        {"p_leq_zero_moments", p_from_moments}};
    j["density_condition"] = {{"epsilon_rho", condition.epsilon_rho},
                              {"violations", condition.violations},
                              {"fraction", condition.fraction}};
    j["checks"] = {{"variation_identities_ok", variation_identities_ok},
                   {"probability_identity_ok", probability_identity_ok}};
    return j;
}

std::string AnalysisReport::to_csv() const {
    // Same leaves as the JSON document, flattened to key,value rows.
    const nlohmann::ordered_json j = to_json();
    std::ostringstream out;
    out << "key,value\n";
    for (const auto& [section, body] : j.items()) {
        if (!body.is_object()) {
            out << section << ',' << body.dump() << '\n';
            continue;
        }
        for (const auto& [key, value] : body.items()) {
            out << section << '.' << key << ',';
            if (value.is_string())
                out << value.get<std::string>();
            else
                out << value.dump();
            out << '\n';
        }
    }
    return out.str();
}

nlohmann::ordered_json error_json(const Error& err) {
    return nlohmann::ordered_json{
        {"error",
         {{"code", errc_name(err.code())},
          {"component", err.component()},
          {"message", err.what()}}}};
}

} // namespace tickvar
