// tickvar: oscillation-grid price model toolkit.
//
// Subcommands: analyze, bands, enumerate, simulate, heavytails.
// Exit codes: 0 success, 1 model violation, 2 input/usage error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tickvar/counting.hpp"
#include "tickvar/csv.hpp"
#include "tickvar/heavy.hpp"
#include "tickvar/normal.hpp"
#include "tickvar/report.hpp"
#include "tickvar/shifted.hpp"

namespace {

using nlohmann::ordered_json;

std::string format_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw tickvar::Error(tickvar::Errc::usage, "cli",
                             "cannot write '" + out_path + "'");
    file << text;
}

// Reports carry only the basename so output does not depend on how the
// input path was spelled.
std::string source_name(const std::string& ticks_path) {
    return std::filesystem::path(ticks_path).filename().string();
}

std::string run_analyze(const std::string& ticks_path, const tickvar::RunConfig& config) {
    const auto series = tickvar::load_ticks(ticks_path);
    const auto report = tickvar::analyze(series, config, source_name(ticks_path));
    if (config.format == "csv")
        return report.to_csv();
    return report.to_json().dump(2) + "\n";
}

std::string run_bands(const std::string& ticks_path, const tickvar::RunConfig& config) {
    config.validate();
    const auto series = tickvar::load_ticks(ticks_path);
    const auto points = tickvar::rolling_bands(series, config.segment_count,
                                               config.window_segments, config.band_k,
                                               config.epsilon_rho);
    if (config.format == "csv") {
        std::ostringstream out;
        out << "timestamp,center,upper,lower\n";
        for (const auto& p : points) {
            out << p.timestamp_ms << ',' << ordered_json(p.center).dump() << ','
                << ordered_json(p.upper).dump() << ',' << ordered_json(p.lower).dump()
                << '\n';
        }
        return out.str();
    }

    ordered_json j;
    j["schema_version"] = tickvar::kSchemaVersion;
    j["source"] = {{"file", source_name(ticks_path)}, {"ticks", series.size()}};
    j["config"] = {{"segments", config.segment_count},
                   {"window", config.window_segments},
                   {"k", config.band_k},
                   {"epsilon_rho", config.epsilon_rho}};
    auto& arr = j["points"] = ordered_json::array();
    for (const auto& p : points) {
        arr.push_back({{"timestamp", p.timestamp_ms},
                       {"center", p.center},
                       {"upper", p.upper},
                       {"lower", p.lower},
                       {"violation_fraction", p.violation_fraction}});
    }
    return j.dump(2) + "\n";
}

std::string run_enumerate(int n) {
    const auto dist = tickvar::distribution(n);
    std::ostringstream out;
    out << "z,count,probability,gaussian\n";
    for (int z = -n; z <= n; ++z) {
        out << z << ',' << dist.count(z).str() << ','
            << format_sig(dist.probability(z), 12) << ','
            << format_sig(tickvar::gaussian_approx(n, z), 12) << '\n';
    }
    return out.str();
}

std::string run_simulate(int n, double alpha, double omega, std::size_t samples,
                         std::uint64_t seed, const std::string& format) {
    if (format != "json" && format != "csv")
        throw tickvar::Error(tickvar::Errc::usage, "cli", "format must be json or csv");
    const auto plan = tickvar::plan_simulation(n, alpha);
    const auto draws = tickvar::simulate_differences(n, alpha, omega, samples, seed);

    if (format == "csv") {
        std::ostringstream out;
        out << "d\n";
        for (double d : draws)
            out << ordered_json(d).dump() << '\n';
        return out.str();
    }

    const double mean =
        std::accumulate(draws.begin(), draws.end(), 0.0) / static_cast<double>(draws.size());
    double var = 0.0;
    for (double d : draws)
        var += (d - mean) * (d - mean);
    var /= static_cast<double>(draws.size() - (draws.size() > 1 ? 1 : 0));

    // Exact law of the sampler: mean omega * z0, variance omega^2 * steps.
    const double target_mu = omega * static_cast<double>(plan.z0);
    const double target_sigma = omega * std::sqrt(static_cast<double>(plan.steps));
    ordered_json j;
    j["schema_version"] = tickvar::kSchemaVersion;
    j["config"] = {{"n", n},       {"alpha", alpha},   {"omega", omega},
                   {"samples", samples}, {"seed", seed}};
    j["plan"] = {{"z0", plan.z0},
                 {"steps", plan.steps},
                 {"realized_alpha", plan.realized_alpha},
                 {"rounding_bias", (plan.realized_alpha - alpha) * 2.0 * n * omega}};
    j["target"] = {{"mu", target_mu}, {"sigma", target_sigma}};
    j["sample"] = {{"mean", mean},
                   {"variance", var},
                   {"mean_over_omega", mean / omega},
                   {"variance_over_omega_sq", var / (omega * omega)}};
    return j.dump(2) + "\n";
}

std::string run_heavytails(std::size_t samples, const std::string& zeta0_arg,
                           double bin_width, std::uint64_t seed) {
    tickvar::Zeta0Mode mode;
    if (zeta0_arg == "uniform") {
        mode = tickvar::Zeta0Mode::uniform01();
    } else {
        try {
            mode = tickvar::Zeta0Mode::fixed(std::stod(zeta0_arg));
        } catch (const std::invalid_argument&) {
            throw tickvar::Error(tickvar::Errc::usage, "cli",
                                 "--zeta0 takes a number in [0, 1) or 'uniform'");
        } catch (const std::out_of_range&) {
            throw tickvar::Error(tickvar::Errc::usage, "cli",
                                 "--zeta0 takes a number in [0, 1) or 'uniform'");
        }
    }

    const auto sample = tickvar::sample_heavy(samples, mode, seed);
    const auto hist = tickvar::build_histogram(sample.zetas, bin_width);

    std::ostringstream out;
    out << "bin_left,bin_right,count,empirical_density,normal_density\n";
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        out << format_sig(hist.edges[i], 6) << ',' << format_sig(hist.edges[i + 1], 6)
            << ',' << hist.counts[i] << ',' << format_sig(hist.model_density[i], 6)
            << ',' << format_sig(hist.normal_density[i], 6) << '\n';
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Oscillation-grid price model toolkit"};
    app.require_subcommand(1);

    tickvar::RunConfig config;
    std::string ticks_path;
    std::string out_path;
    std::string zeta0_arg = "uniform";
    int n = 8;
    double alpha = 0.0;
    double omega = 1.0;
    std::size_t samples = 100000;
    double bin_width = 0.25;
    bool clamp = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Variation and parameter report");
    analyze_cmd->add_option("ticks", ticks_path, "Tick CSV file")->required();
    analyze_cmd->add_option("--segments", config.segment_count, "Elementary segments");
    analyze_cmd->add_option("--epsilon-rho", config.epsilon_rho, "Density condition bound");
    analyze_cmd->add_flag("--clamp", clamp, "Clamp alpha into (-1, 1)");
    analyze_cmd->add_option("--format", config.format, "json or csv");
    analyze_cmd->add_option("--out", out_path, "Write the report to a file");

    auto* bands_cmd = app.add_subcommand("bands", "Rolling forecast bands");
    bands_cmd->add_option("ticks", ticks_path, "Tick CSV file")->required();
    bands_cmd->add_option("--segments", config.segment_count, "Elementary segments");
    bands_cmd->add_option("--window", config.window_segments, "Window size in segments")
        ->required();
    bands_cmd->add_option("--k", config.band_k, "Band width multiplier");
    bands_cmd->add_option("--epsilon-rho", config.epsilon_rho, "Density condition bound");
    bands_cmd->add_option("--format", config.format, "json or csv");
    bands_cmd->add_option("--out", out_path, "Write the report to a file");

    auto* enum_cmd = app.add_subcommand("enumerate", "Difference distribution table");
    enum_cmd->add_option("--n", n, "Oscillation pair count")->required();
    enum_cmd->add_option("--out", out_path, "Write the table to a file");

    auto* sim_cmd = app.add_subcommand("simulate", "Sample endpoint differences");
    sim_cmd->add_option("--n", n, "Oscillation pair count")->required();
    sim_cmd->add_option("--alpha", alpha, "Drift parameter in (-1, 1)")->required();
    sim_cmd->add_option("--omega", omega, "Average oscillation, price units");
    sim_cmd->add_option("--samples", samples, "Number of paths");
    sim_cmd->add_option("--seed", config.seed, "RNG seed");
    sim_cmd->add_option("--format", config.format, "json summary or csv samples");
    sim_cmd->add_option("--out", out_path, "Write the output to a file");

    auto* heavy_cmd = app.add_subcommand("heavytails", "Heavy-tails histogram");
    heavy_cmd->add_option("--samples", samples, "Number of draws");
    heavy_cmd->add_option("--zeta0", zeta0_arg, "Anomaly scale in [0, 1) or 'uniform'");
    heavy_cmd->add_option("--bins", bin_width, "Bin width in zeta units");
    heavy_cmd->add_option("--seed", config.seed, "RNG seed");
    heavy_cmd->add_option("--out", out_path, "Write the histogram to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    config.alpha_policy = clamp ? tickvar::AlphaPolicy::clamp : tickvar::AlphaPolicy::error_out;

    try {
        std::string output;
        if (analyze_cmd->parsed())
            output = run_analyze(ticks_path, config);
        else if (bands_cmd->parsed())
            output = run_bands(ticks_path, config);
        else if (enum_cmd->parsed())
            output = run_enumerate(n);
        else if (sim_cmd->parsed())
            output = run_simulate(n, alpha, omega, samples, config.seed, config.format);
        else if (heavy_cmd->parsed())
            output = run_heavytails(samples, zeta0_arg, bin_width, config.seed);
        emit(output, out_path);
        return 0;
    } catch (const tickvar::Error& err) {
        std::cout << tickvar::error_json(err).dump(2) << std::endl;
        return tickvar::is_model_error(err.code()) ? 1 : 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << std::endl;
        return 2;
    }
}
