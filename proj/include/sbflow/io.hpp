// io.hpp — CSV/JSON serialization of traces, kernel tables and heatmaps

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sbflow/energetics.hpp"
#include "sbflow/sweep.hpp"
#include "sbflow/tcl2.hpp"

namespace sbflow::io {

// Shortest decimal form that round-trips to the same double; '.' separator,
// locale independent.
std::string format_double(double v);

// A column carries the power of omega0 by which its values are rescaled when
// results are emitted in physical units (internally omega0 = 1).
struct Column {
    std::string name;
    int omega0_power = 0;
    std::vector<double> values;
};
using Table = std::vector<Column>;

void write_table_csv(std::ostream& os, const Table& table, double omega0 = 1.0);
nlohmann::json table_json(const Table& table, double omega0 = 1.0);

// Parses a numeric CSV with a header line, as written by write_table_csv.
Table parse_table_csv(std::istream& is);

Table trace_table(const tcl2::Trajectory& traj, const energetics::FlowTrace& flow,
                  const bath::BathParams& p, const tcl2::SystemParams& s,
                  const std::vector<double>* distance_trace);
Table kernels_table(const bath::BathParams& p, const tcl2::TimeGrid& grid);
// Heatmap cells in row-major order (omega outer, temp inner); the resonance
// deviation kind is emitted as an absolute value.
Table heatmap_table(const sweep::HeatmapGrid& grid);
Table resonance_overlay_table(double temp_min, double temp_max, std::size_t n_samples);

nlohmann::json heatmap_meta(const sweep::HeatmapGrid& grid);

} // namespace sbflow::io
