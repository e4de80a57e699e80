#include "sbflow/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "sbflow/errors.hpp"
#include "sbflow/version.hpp"

namespace sbflow::io {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

double scale_factor(double omega0, int power) {
    if (omega0 == 1.0 || power == 0) return 1.0;
    return std::pow(omega0, power);
}

} // namespace

void write_table_csv(std::ostream& os, const Table& table, double omega0) {
    if (table.empty()) {
        throw InputError("write_table_csv: empty table");
    }
    const std::size_t rows = table.front().values.size();
    for (const Column& col : table) {
        if (col.values.size() != rows) {
            throw InputError("write_table_csv: ragged columns");
        }
    }
    for (std::size_t c = 0; c < table.size(); ++c) {
        os << (c ? "," : "") << table[c].name;
    }
    os << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.size(); ++c) {
            const double v = table[c].values[r] * scale_factor(omega0, table[c].omega0_power);
            os << (c ? "," : "") << format_double(v);
        }
        os << '\n';
    }
}

nlohmann::json table_json(const Table& table, double omega0) {
    nlohmann::json cols = nlohmann::json::array();
    nlohmann::json rows = nlohmann::json::array();
    const std::size_t n = table.empty() ? 0 : table.front().values.size();
    for (const Column& col : table) cols.push_back(col.name);
    for (std::size_t r = 0; r < n; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (const Column& col : table) {
            row.push_back(col.values[r] * scale_factor(omega0, col.omega0_power));
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"columns", cols}, {"rows", rows}};
}

Table parse_table_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw InputError("parse_table_csv: missing header");
    }
    Table table;
    {
        std::stringstream header(line);
        std::string name;
        while (std::getline(header, name, ',')) {
            table.push_back({name, 0, {}});
        }
    }
    if (table.empty()) {
        throw InputError("parse_table_csv: empty header");
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(row, cell, ',')) {
            if (c >= table.size()) {
                throw InputError("parse_table_csv: row wider than header");
            }
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc{}) {
                throw InputError("parse_table_csv: bad number '" + cell + "'");
            }
            table[c++].values.push_back(v);
        }
        if (c != table.size()) {
            throw InputError("parse_table_csv: row narrower than header");
        }
    }
    return table;
}

Table trace_table(const tcl2::Trajectory& traj, const energetics::FlowTrace& flow,
                  const bath::BathParams& p, const tcl2::SystemParams& s,
                  const std::vector<double>* distance_trace) {
    const std::size_t n = traj.size();
    if (flow.times.size() != n) {
        throw InputError("trace_table: trajectory and flow trace differ in length");
    }
    Table table;
    table.push_back({"t", -1, flow.times});
    Column rho00{"rho00", 0, {}};
    Column azz{"a_zz", 1, {}};
    Column bz{"b_z", 1, {}};
    Column markov_rho{"rho00_markov", 0, {}};
    rho00.values.reserve(n);
    azz.values.reserve(n);
    bz.values.reserve(n);
    markov_rho.values.reserve(n);
    const double rho00_0 = traj[0].state.p0;
    for (std::size_t i = 0; i < n; ++i) {
        rho00.values.push_back(traj[i].state.p0);
        azz.values.push_back(traj[i].coeffs.a_zz);
        bz.values.push_back(traj[i].coeffs.b_z);
        markov_rho.values.push_back(tcl2::born_markov_population(traj[i].t, p, s, rho00_0));
    }
    table.push_back(std::move(rho00));
    table.push_back({"theta", 2, flow.theta});
    table.push_back({"theta_alt", 2, flow.theta_alt});
    table.push_back({"dq", 1, flow.dq});
    table.push_back({"f", 2, flow.f_term});
    table.push_back(std::move(markov_rho));
    table.push_back({"theta_markov", 2, flow.markov_theta});
    table.push_back(std::move(azz));
    table.push_back(std::move(bz));
    if (distance_trace != nullptr) {
        if (distance_trace->size() != n) {
            throw InputError("trace_table: distance trace differs in length");
        }
        table.push_back({"D_trace", 0, *distance_trace});
    }
    return table;
}

Table kernels_table(const bath::BathParams& p, const tcl2::TimeGrid& grid) {
    grid.validate();
    const std::size_t n = grid.step_count() + 1;
    Column t{"t", -1, {}};
    Column d1{"D1", 2, {}};
    Column d1n{"D1_normalized", 0, {}};
    Column d2{"D2", 2, {}};
    t.values.reserve(n);
    d1.values.reserve(n);
    d1n.values.reserve(n);
    d2.values.reserve(n);
    const double d1_zero = bath::noise_kernel(0.0, p);
    for (std::size_t i = 0; i < n; ++i) {
        const double time = static_cast<double>(i) * grid.dt;
        const double v1 = bath::noise_kernel(time, p);
        t.values.push_back(time);
        d1.values.push_back(v1);
        d1n.values.push_back(d1_zero == 0.0 ? 0.0 : v1 / d1_zero);
        d2.values.push_back(bath::dissipation_kernel(time, p));
    }
    return {std::move(t), std::move(d1), std::move(d1n), std::move(d2)};
}

Table heatmap_table(const sweep::HeatmapGrid& grid) {
    const bool absolute = grid.kind == sweep::MeasureKind::ResonanceDeviation;
    Column omega{"omega_c", 1, {}};
    Column temp{"T_E", 1, {}};
    Column value{"value", grid.kind == sweep::MeasureKind::Backflow ? 1 : 0, {}};
    const std::size_t total = grid.spec.n_omega * grid.spec.n_temp;
    omega.values.reserve(total);
    temp.values.reserve(total);
    value.values.reserve(total);
    for (std::size_t i = 0; i < grid.spec.n_omega; ++i) {
        for (std::size_t j = 0; j < grid.spec.n_temp; ++j) {
            omega.values.push_back(grid.spec.cell_omega(i));
            temp.values.push_back(grid.spec.cell_temp(j));
            const double v = grid.at(i, j);
            value.values.push_back(absolute ? std::abs(v) : v);
        }
    }
    return {std::move(omega), std::move(temp), std::move(value)};
}

Table resonance_overlay_table(double temp_min, double temp_max, std::size_t n_samples) {
    if (n_samples < 2) {
        throw InputError("resonance_overlay_table: need at least two samples");
    }
    Column temp{"T_E", 1, {}};
    Column omega{"omega_res", 1, {}};
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t =
            temp_min + (temp_max - temp_min) * static_cast<double>(k) /
                           static_cast<double>(n_samples - 1);
        temp.values.push_back(t);
        omega.values.push_back(bath::resonance_curve(t, 1.0));
    }
    return {std::move(temp), std::move(omega)};
}

nlohmann::json heatmap_meta(const sweep::HeatmapGrid& grid) {
    nlohmann::json failed = nlohmann::json::array();
    for (const sweep::CellFailure& f : grid.failed_cells) {
        failed.push_back({{"omega_index", f.omega_index},
                          {"temp_index", f.temp_index},
                          {"message", f.message}});
    }
    return nlohmann::json{
        {"generated_by", std::string("sbflow ") + kVersion},
        {"measure", sweep::measure_kind_name(grid.kind)},
        {"lambda", grid.lambda},
        {"omega0", grid.omega0},
        {"t_max", grid.t_max},
        {"dt", grid.dt},
        {"grid",
         {{"omega_range", {grid.spec.omega_min, grid.spec.omega_max}},
          {"temp_range", {grid.spec.temp_min, grid.spec.temp_max}},
          {"n_omega", grid.spec.n_omega},
          {"n_temp", grid.spec.n_temp}}},
        {"failed_cells", failed},
    };
}

} // namespace sbflow::io
