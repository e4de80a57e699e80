// sweep.hpp — parameter-grid evaluation of the backflow and regrowth measures
// over the (cutoff, bath temperature) plane

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sbflow/tcl2.hpp"

namespace sbflow::sweep {

// Uniform rectangular grid; cell coordinates are the cell centers of the
// closed ranges, which keeps the boundary values strictly inside them.
struct GridSpec {
    double omega_min = 0.2;
    double omega_max = 5.0;
    double temp_min = 0.2;
    double temp_max = 5.0;
    std::size_t n_omega = 50;
    std::size_t n_temp = 50;

    void validate() const;
    double cell_omega(std::size_t i) const;
    double cell_temp(std::size_t j) const;
};

enum class MeasureKind { Backflow, Blp, ResonanceDeviation };

std::string measure_kind_name(MeasureKind kind);

struct CellFailure {
    std::size_t omega_index = 0;
    std::size_t temp_index = 0;
    std::string message;
};

struct HeatmapGrid {
    GridSpec spec;
    std::vector<double> values;  // row-major: omega outer, temp inner
    double lambda = 0.1;
    double omega0 = 1.0;
    double t_max = 100.0;
    double dt = 0.01;
    MeasureKind kind = MeasureKind::Backflow;
    std::vector<CellFailure> failed_cells;  // values at failed cells are NaN

    double at(std::size_t i_omega, std::size_t i_temp) const {
        return values[i_omega * spec.n_temp + i_temp];
    }
    double max_value() const;  // largest finite cell value
};

// All sweeps map independently over the cells; results land in pre-assigned
// slots, so the output is identical for any worker count (jobs = 0 uses the
// hardware concurrency). Per-cell failures are collected, not fatal.
HeatmapGrid sweep_backflow(const GridSpec& spec, double lambda, const tcl2::TimeGrid& grid,
                           unsigned jobs = 0);
HeatmapGrid sweep_blp(const GridSpec& spec, double lambda, const tcl2::TimeGrid& grid,
                      unsigned jobs = 0);

// Raw d/dw J_eff at omega0 per cell (sign information retained; serializers
// emit the absolute value).
HeatmapGrid sweep_resonance_deviation(const GridSpec& spec, double lambda, unsigned jobs = 0);

} // namespace sbflow::sweep
