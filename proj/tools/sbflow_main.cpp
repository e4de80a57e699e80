// sbflow — command-line surface: time traces, kernel tables and
// (cutoff, temperature) heatmaps as CSV/JSON data files

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbflow/config.hpp"
#include "sbflow/energetics.hpp"
#include "sbflow/errors.hpp"
#include "sbflow/io.hpp"
#include "sbflow/nonmarkov.hpp"
#include "sbflow/sweep.hpp"
#include "sbflow/tcl2.hpp"
#include "sbflow/version.hpp"

namespace {

using nlohmann::json;
using namespace sbflow;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerics = 3;

struct FlagCapture {
    double lambda = 0, cutoff = 0, bath_temp = 0, sys_temp = 0, t_max = 0, dt = 0, omega0 = 0;
    unsigned jobs = 0;
    std::string out, format, config_path, grid, omega_range, temp_range;
    bool resonance_overlay = false;
    bool blp = false;
    std::vector<std::pair<std::string, CLI::Option*>> tracked;
};

void add_common_options(CLI::App* cmd, FlagCapture& f) {
    auto track = [&](const std::string& key, CLI::Option* opt) {
        f.tracked.emplace_back(key, opt);
    };
    track("lambda", cmd->add_option("--lambda", f.lambda, "coupling strength"));
    track("cutoff", cmd->add_option("--cutoff", f.cutoff, "bath cutoff frequency (units of omega0)"));
    track("bath_temp", cmd->add_option("--bath-temp", f.bath_temp, "bath temperature T_E"));
    track("sys_temp", cmd->add_option("--sys-temp", f.sys_temp, "effective initial system temperature T_S"));
    track("t_max", cmd->add_option("--t-max", f.t_max, "integration horizon (units of 1/omega0)"));
    track("dt", cmd->add_option("--dt", f.dt, "integrator step"));
    track("omega0", cmd->add_option("--omega0", f.omega0, "rescale emitted quantities to this level splitting"));
    track("out", cmd->add_option("--out", f.out, "output path (stdout for trace/kernels when omitted)"));
    track("format", cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"})));
    track("jobs", cmd->add_option("--jobs", f.jobs, "worker cap for sweeps (0 = hardware)"));
    cmd->add_option("--config", f.config_path, "flat key-value JSON configuration file");
}

void add_map_options(CLI::App* cmd, FlagCapture& f) {
    auto track = [&](const std::string& key, CLI::Option* opt) {
        f.tracked.emplace_back(key, opt);
    };
    track("grid", cmd->add_option("--grid", f.grid, "cell counts as NxM (omega x temperature)"));
    track("omega_range", cmd->add_option("--omega-range", f.omega_range, "cutoff range a:b"));
    track("temp_range", cmd->add_option("--temp-range", f.temp_range, "temperature range a:b"));
    track("resonance_overlay",
          cmd->add_flag("--resonance-overlay", f.resonance_overlay,
                        "also emit the resonance curve as T_E,omega_res"));
}

json flags_to_json(const FlagCapture& f) {
    json out = json::object();
    for (const auto& [key, opt] : f.tracked) {
        if (opt->count() == 0) continue;
        if (key == "lambda") out[key] = f.lambda;
        else if (key == "cutoff") out[key] = f.cutoff;
        else if (key == "bath_temp") out[key] = f.bath_temp;
        else if (key == "sys_temp") out[key] = f.sys_temp;
        else if (key == "t_max") out[key] = f.t_max;
        else if (key == "dt") out[key] = f.dt;
        else if (key == "omega0") out[key] = f.omega0;
        else if (key == "out") out[key] = f.out;
        else if (key == "format") out[key] = f.format;
        else if (key == "jobs") out[key] = f.jobs;
        else if (key == "grid") out[key] = f.grid;
        else if (key == "omega_range") out[key] = f.omega_range;
        else if (key == "temp_range") out[key] = f.temp_range;
        else if (key == "resonance_overlay") out[key] = f.resonance_overlay;
        else if (key == "blp") out[key] = f.blp;
    }
    return out;
}

json load_config_file(const std::string& path) {
    if (path.empty()) return json();
    std::ifstream in(path);
    if (!in) {
        throw InputError("config: cannot open '" + path + "'");
    }
    json parsed;
    try {
        in >> parsed;
    } catch (const json::parse_error& e) {
        throw InputError(std::string("config: ") + e.what());
    }
    return parsed;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open output file '" + path + "'");
    }
    out << text;
}

std::string table_csv_text(const io::Table& table, double omega0) {
    std::ostringstream os;
    io::write_table_csv(os, table, omega0);
    return os.str();
}

std::filesystem::path with_suffix(const std::string& out, const std::string& suffix) {
    std::filesystem::path p(out);
    std::filesystem::path stem = p.parent_path() / p.stem();
    return std::filesystem::path(stem.string() + suffix);
}

json common_meta(const cli::RunConfig& cfg) {
    return json{{"generated_by", std::string("sbflow ") + kVersion},
                {"lambda", cfg.lambda},
                {"cutoff", cfg.cutoff},
                {"bath_temp", cfg.bath_temp},
                {"omega0", cfg.omega0},
                {"t_max", cfg.t_max},
                {"dt", cfg.dt}};
}

int cmd_trace(const cli::RunConfig& cfg) {
    bath::BathParams p{cfg.lambda, cfg.cutoff, cfg.bath_temp};
    p.validate();
    tcl2::SystemParams s;
    s.sys_temp = cfg.sys_temp;
    s.validate();
    tcl2::TimeGrid grid{cfg.t_max, cfg.dt};
    grid.validate();

    const tcl2::Trajectory traj = tcl2::propagate(p, s, tcl2::QubitState::gibbs(s), grid);
    const energetics::FlowTrace flow = energetics::energy_flow(traj, p, s);

    std::optional<std::vector<double>> distance;
    if (cfg.with_blp) {
        // canonical-pair trace distance on the same grid
        distance = nonmarkov::blp_measure(p, s, grid).distance_trace;
    }
    const io::Table table =
        io::trace_table(traj, flow, p, s, distance ? &*distance : nullptr);

    if (cfg.format == "json") {
        json doc = io::table_json(table, cfg.omega0);
        json meta = common_meta(cfg);
        meta["sys_temp"] = cfg.sys_temp;
        doc["meta"] = meta;
        write_text(cfg.out, doc.dump(2) + "\n");
    } else {
        write_text(cfg.out, table_csv_text(table, cfg.omega0));
    }
    return kExitOk;
}

int cmd_kernels(const cli::RunConfig& cfg) {
    bath::BathParams p{cfg.lambda, cfg.cutoff, cfg.bath_temp};
    p.validate();
    tcl2::TimeGrid grid{cfg.t_max, cfg.dt};
    grid.validate();
    const io::Table table = io::kernels_table(p, grid);
    if (cfg.format == "json") {
        json doc = io::table_json(table, cfg.omega0);
        doc["meta"] = common_meta(cfg);
        write_text(cfg.out, doc.dump(2) + "\n");
    } else {
        write_text(cfg.out, table_csv_text(table, cfg.omega0));
    }
    return kExitOk;
}

int cmd_map(sweep::MeasureKind kind, const cli::RunConfig& cfg) {
    if (cfg.out.empty()) {
        throw InputError("map commands require --out");
    }
    sweep::GridSpec spec{cfg.omega_min, cfg.omega_max, cfg.temp_min,
                         cfg.temp_max, cfg.n_omega,   cfg.n_temp};
    spec.validate();
    tcl2::TimeGrid grid{cfg.t_max, cfg.dt};

    sweep::HeatmapGrid map;
    switch (kind) {
        case sweep::MeasureKind::Backflow:
            grid.validate();
            map = sweep::sweep_backflow(spec, cfg.lambda, grid, cfg.jobs);
            break;
        case sweep::MeasureKind::Blp:
            grid.validate();
            map = sweep::sweep_blp(spec, cfg.lambda, grid, cfg.jobs);
            break;
        case sweep::MeasureKind::ResonanceDeviation:
            map = sweep::sweep_resonance_deviation(spec, cfg.lambda, cfg.jobs);
            break;
    }
    map.omega0 = 1.0;

    const io::Table table = io::heatmap_table(map);
    json meta = io::heatmap_meta(map);
    meta["omega0"] = cfg.omega0;

    std::optional<io::Table> overlay;
    if (cfg.resonance_overlay) {
        overlay = io::resonance_overlay_table(spec.temp_min, spec.temp_max, spec.n_temp);
    }

    if (cfg.format == "json") {
        json doc = io::table_json(table, cfg.omega0);
        doc["meta"] = meta;
        if (overlay) {
            doc["resonance_overlay"] = io::table_json(*overlay, cfg.omega0);
        }
        write_text(cfg.out, doc.dump(2) + "\n");
    } else {
        write_text(cfg.out, table_csv_text(table, cfg.omega0));
        write_text(with_suffix(cfg.out, ".meta.json").string(), meta.dump(2) + "\n");
        if (overlay) {
            write_text(with_suffix(cfg.out, "_resonance.csv").string(),
                       table_csv_text(*overlay, cfg.omega0));
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"energy flow and non-Markovianity in the driven-free spin-boson model"};
    app.set_version_flag("--version", std::string("sbflow ") + kVersion);
    app.require_subcommand(1);

    FlagCapture trace_flags, kernel_flags, backflow_flags, blp_flags, resonance_flags;

    CLI::App* trace = app.add_subcommand("trace", "time series of rho00, theta and dq");
    add_common_options(trace, trace_flags);
    trace_flags.tracked.emplace_back(
        "blp", trace->add_flag("--blp", trace_flags.blp,
                               "append the canonical-pair trace distance column"));

    CLI::App* kernels = app.add_subcommand("kernels", "noise/dissipation kernel table");
    add_common_options(kernels, kernel_flags);

    CLI::App* backflow_map = app.add_subcommand("backflow-map", "energy backflow heatmap");
    add_common_options(backflow_map, backflow_flags);
    add_map_options(backflow_map, backflow_flags);

    CLI::App* blp_map = app.add_subcommand("blp-map", "trace-distance regrowth heatmap");
    add_common_options(blp_map, blp_flags);
    add_map_options(blp_map, blp_flags);

    CLI::App* resonance_map =
        app.add_subcommand("resonance-map", "|d/dw J_eff at omega0| heatmap");
    add_common_options(resonance_map, resonance_flags);
    add_map_options(resonance_map, resonance_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "sbflow: " << e.what() << "\n";
        return kExitValidation;
    }

    auto run = [&](const FlagCapture& flags, auto&& fn) {
        try {
            const cli::RunConfig resolved = cli::resolve_config(
                cli::RunConfig{}, load_config_file(flags.config_path), flags_to_json(flags));
            return fn(resolved);
        } catch (const NumericsError& e) {
            std::cerr << "sbflow: numerics failure: " << e.what() << "\n";
            return kExitNumerics;
        } catch (const ConvergenceError& e) {
            std::cerr << "sbflow: numerics failure: " << e.what() << "\n";
            return kExitNumerics;
        } catch (const PoleError& e) {
            std::cerr << "sbflow: numerics failure: " << e.what() << "\n";
            return kExitNumerics;
        } catch (const Error& e) {
            std::cerr << "sbflow: " << e.what() << "\n";
            return kExitValidation;
        } catch (const std::exception& e) {
            std::cerr << "sbflow: " << e.what() << "\n";
            return kExitValidation;
        }
    };

    if (trace->parsed()) return run(trace_flags, cmd_trace);
    if (kernels->parsed()) return run(kernel_flags, cmd_kernels);
    if (backflow_map->parsed()) {
        return run(backflow_flags,
                   [](const cli::RunConfig& c) { return cmd_map(sweep::MeasureKind::Backflow, c); });
    }
    if (blp_map->parsed()) {
        return run(blp_flags,
                   [](const cli::RunConfig& c) { return cmd_map(sweep::MeasureKind::Blp, c); });
    }
    if (resonance_map->parsed()) {
        return run(resonance_flags, [](const cli::RunConfig& c) {
            return cmd_map(sweep::MeasureKind::ResonanceDeviation, c);
        });
    }
    std::cerr << "sbflow: no subcommand\n";
    return kExitValidation;
}
