#include "sbflow/config.hpp"

#include <charconv>

#include "sbflow/errors.hpp"

namespace sbflow::cli {

namespace {

double to_double(const nlohmann::json& v, const std::string& key) {
    if (!v.is_number()) {
        throw InputError("config: key '" + key + "' must be a number");
    }
    return v.get<double>();
}

std::pair<std::string, std::string> split_once(const std::string& text, char sep,
                                               const char* what) {
    const std::size_t pos = text.find(sep);
    if (pos == std::string::npos || pos == 0 || pos + 1 == text.size()) {
        throw InputError(std::string("config: expected ") + what);
    }
    return {text.substr(0, pos), text.substr(pos + 1)};
}

} // namespace

std::pair<std::size_t, std::size_t> parse_grid_shape(const std::string& text) {
    const auto [left, right] = split_once(text, 'x', "grid shape 'NxM'");
    std::size_t n = 0, m = 0;
    auto r1 = std::from_chars(left.data(), left.data() + left.size(), n);
    auto r2 = std::from_chars(right.data(), right.data() + right.size(), m);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != left.data() + left.size() ||
        r2.ptr != right.data() + right.size()) {
        throw InputError("config: bad grid shape '" + text + "'");
    }
    return {n, m};
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto [left, right] = split_once(text, ':', "range 'a:b'");
    try {
        return {std::stod(left), std::stod(right)};
    } catch (const std::exception&) {
        throw InputError("config: bad range '" + text + "'");
    }
}

RunConfig apply_layer(RunConfig base, const nlohmann::json& values) {
    if (values.is_null()) return base;
    if (!values.is_object()) {
        throw InputError("config: expected a flat JSON object");
    }
    for (const auto& [key, value] : values.items()) {
        if (key == "lambda") {
            base.lambda = to_double(value, key);
        } else if (key == "cutoff") {
            base.cutoff = to_double(value, key);
        } else if (key == "bath_temp") {
            base.bath_temp = to_double(value, key);
        } else if (key == "sys_temp") {
            base.sys_temp = to_double(value, key);
        } else if (key == "t_max") {
            base.t_max = to_double(value, key);
        } else if (key == "dt") {
            base.dt = to_double(value, key);
        } else if (key == "omega0") {
            base.omega0 = to_double(value, key);
        } else if (key == "out") {
            base.out = value.get<std::string>();
        } else if (key == "format") {
            base.format = value.get<std::string>();
        } else if (key == "jobs") {
            base.jobs = value.get<unsigned>();
        } else if (key == "grid") {
            const auto [n, m] = parse_grid_shape(value.get<std::string>());
            base.n_omega = n;
            base.n_temp = m;
        } else if (key == "omega_range") {
            const auto [lo, hi] = parse_range(value.get<std::string>());
            base.omega_min = lo;
            base.omega_max = hi;
        } else if (key == "temp_range") {
            const auto [lo, hi] = parse_range(value.get<std::string>());
            base.temp_min = lo;
            base.temp_max = hi;
        } else if (key == "resonance_overlay") {
            base.resonance_overlay = value.get<bool>();
        } else if (key == "blp") {
            base.with_blp = value.get<bool>();
        } else {
            throw InputError("config: unknown key '" + key + "'");
        }
    }
    return base;
}

RunConfig resolve_config(const RunConfig& defaults, const nlohmann::json& file_values,
                         const nlohmann::json& flag_values) {
    return apply_layer(apply_layer(defaults, file_values), flag_values);
}

} // namespace sbflow::cli
