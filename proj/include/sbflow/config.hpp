// config.hpp — run configuration with defaults < config file < command line

#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

namespace sbflow::cli {

struct RunConfig {
    double lambda = 0.1;
    double cutoff = 0.4;
    double bath_temp = 1.0;
    double sys_temp = 5.0;
    double t_max = 100.0;
    double dt = 0.01;
    double omega0 = 1.0;  // output rescaling only; internal units keep omega0 = 1
    std::string out;      // empty means stdout (trace/kernels only)
    std::string format = "csv";
    unsigned jobs = 0;  // 0 = hardware concurrency
    std::size_t n_omega = 50;
    std::size_t n_temp = 50;
    double omega_min = 0.2;
    double omega_max = 5.0;
    double temp_min = 0.2;
    double temp_max = 5.0;
    bool resonance_overlay = false;
    bool with_blp = false;
};

// Overlay `values` (flat key/value JSON) onto `base`. Keys mirror the long
// option names with underscores: lambda, cutoff, bath_temp, sys_temp, t_max,
// dt, omega0, out, format, jobs, grid ("NxM"), omega_range ("a:b"),
// temp_range ("a:b"), resonance_overlay, blp. Unknown keys raise InputError.
RunConfig apply_layer(RunConfig base, const nlohmann::json& values);

// defaults, then the config file, then explicit command-line flags
RunConfig resolve_config(const RunConfig& defaults, const nlohmann::json& file_values,
                         const nlohmann::json& flag_values);

// "NxM" -> (N, M); "a:b" -> (a, b)
std::pair<std::size_t, std::size_t> parse_grid_shape(const std::string& text);
std::pair<double, double> parse_range(const std::string& text);

} // namespace sbflow::cli
