// nonmarkov.hpp — trace-distance dynamics and the information-backflow
// (trace-distance regrowth) measure

#pragma once

#include <utility>
#include <vector>

#include "sbflow/tcl2.hpp"

namespace sbflow::nonmarkov {

struct StatePair {
    tcl2::QubitState s1;
    tcl2::QubitState s2;

    // Antipodal equatorial pair with Bloch vectors (0, +-1, 0); maximizes the
    // regrowth measure for this model.
    static StatePair canonical();
};

// Half the Euclidean distance of Bloch vectors, which for qubits equals half
// the trace norm of the difference.
double trace_distance(const tcl2::QubitState& a, const tcl2::QubitState& b);

struct BLPResult {
    double value = 0.0;  // sum of trace-distance regrowths
    std::vector<std::pair<double, double>> regrowth_intervals;
    std::vector<double> times;
    std::vector<double> distance_trace;
};

// Propagates both states, forms D(t) at every sample, differentiates by
// centered differences and integrates the positive part of sigma = dD/dt.
BLPResult blp_measure(const bath::BathParams& p, const tcl2::SystemParams& s,
                      const tcl2::TimeGrid& grid,
                      const StatePair& pair = StatePair::canonical());

// Independent oracle for the canonical pair. The pair difference reduces to
// one complex amplitude whose Schroedinger-picture quadratures obey
//   u' = -omega0 v,   v' = omega0 u - 2 alpha(t) v - 2 beta(t) u,
// with alpha + i beta the accumulated D1(tau) e^{-i omega0 tau} integral and
// D(t) = sqrt(u^2 + v^2). The coefficients are tabulated by cumulative
// trapezoid on a five-fold refined grid and the reduced system is integrated
// separately from tcl2::propagate, so the two routes share no state.
// distance_trace is reported on the coarse grid nodes.
BLPResult blp_closed_form(const bath::BathParams& p, const tcl2::TimeGrid& grid);

} // namespace sbflow::nonmarkov
