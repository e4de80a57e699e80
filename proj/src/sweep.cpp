#include "sbflow/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "sbflow/energetics.hpp"
#include "sbflow/errors.hpp"
#include "sbflow/nonmarkov.hpp"

namespace sbflow::sweep {

void GridSpec::validate() const {
    if (!(omega_min > 0.0) || !(temp_min > 0.0)) {
        throw DomainError("GridSpec: range minima must be positive");
    }
    if (!(omega_max > omega_min) || !(temp_max > temp_min)) {
        throw DomainError("GridSpec: range maxima must exceed the minima");
    }
    if (n_omega < 2 || n_temp < 2) {
        throw DomainError("GridSpec: need at least 2 cells per axis");
    }
}

double GridSpec::cell_omega(std::size_t i) const {
    const double width = (omega_max - omega_min) / static_cast<double>(n_omega);
    return omega_min + (static_cast<double>(i) + 0.5) * width;
}

double GridSpec::cell_temp(std::size_t j) const {
    const double width = (temp_max - temp_min) / static_cast<double>(n_temp);
    return temp_min + (static_cast<double>(j) + 0.5) * width;
}

std::string measure_kind_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::Backflow: return "backflow";
        case MeasureKind::Blp: return "blp";
        case MeasureKind::ResonanceDeviation: return "resonance_deviation";
    }
    return "unknown";
}

double HeatmapGrid::max_value() const {
    double best = -std::numeric_limits<double>::infinity();
    for (double v : values) {
        if (std::isfinite(v)) best = std::max(best, v);
    }
    return best;
}

namespace {

HeatmapGrid run_sweep(const GridSpec& spec, double lambda, const tcl2::TimeGrid& grid,
                      MeasureKind kind, unsigned jobs,
                      const std::function<double(double, double)>& cell_value) {
    spec.validate();
    bath::BathParams{lambda, 1.0, 1.0}.validate();  // validates lambda, warns once

    HeatmapGrid out;
    out.spec = spec;
    out.lambda = lambda;
    out.t_max = grid.t_max;
    out.dt = grid.dt;
    out.kind = kind;
    const std::size_t total = spec.n_omega * spec.n_temp;
    out.values.assign(total, std::numeric_limits<double>::quiet_NaN());

    std::mutex failure_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            const std::size_t i = idx / spec.n_temp;
            const std::size_t j = idx % spec.n_temp;
            try {
                out.values[idx] = cell_value(spec.cell_omega(i), spec.cell_temp(j));
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                out.failed_cells.push_back({i, j, e.what()});
            }
        }
    };

    unsigned n_threads = jobs == 0 ? std::thread::hardware_concurrency() : jobs;
    n_threads = std::max(1u, std::min<unsigned>(n_threads, static_cast<unsigned>(total)));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads - 1);
        for (unsigned k = 0; k + 1 < n_threads; ++k) pool.emplace_back(worker);
        worker();
        for (std::thread& th : pool) th.join();
    }

    std::sort(out.failed_cells.begin(), out.failed_cells.end(),
              [&](const CellFailure& a, const CellFailure& b) {
                  return a.omega_index * spec.n_temp + a.temp_index <
                         b.omega_index * spec.n_temp + b.temp_index;
              });
    return out;
}

} // namespace

HeatmapGrid sweep_backflow(const GridSpec& spec, double lambda, const tcl2::TimeGrid& grid,
                           unsigned jobs) {
    grid.validate();
    return run_sweep(spec, lambda, grid, MeasureKind::Backflow, jobs,
                     [&](double omega_c, double temp) {
                         bath::BathParams p{lambda, omega_c, temp};
                         tcl2::SystemParams s;
                         s.sys_temp = temp;  // T_S = T_E maximizes the measure
                         return energetics::backflow_measure(p, s, grid).value;
                     });
}

HeatmapGrid sweep_blp(const GridSpec& spec, double lambda, const tcl2::TimeGrid& grid,
                      unsigned jobs) {
    grid.validate();
    return run_sweep(spec, lambda, grid, MeasureKind::Blp, jobs,
                     [&](double omega_c, double temp) {
                         bath::BathParams p{lambda, omega_c, temp};
                         tcl2::SystemParams s;
                         return nonmarkov::blp_measure(p, s, grid).value;
                     });
}

HeatmapGrid sweep_resonance_deviation(const GridSpec& spec, double lambda, unsigned jobs) {
    tcl2::TimeGrid unused;
    HeatmapGrid out = run_sweep(spec, lambda, unused, MeasureKind::ResonanceDeviation, jobs,
                                [&](double omega_c, double temp) {
                                    bath::BathParams p{lambda, omega_c, temp};
                                    return bath::resonance_deviation(p, 1.0);
                                });
    return out;
}

} // namespace sbflow::sweep
