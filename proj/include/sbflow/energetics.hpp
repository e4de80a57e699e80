// energetics.hpp — energy flow per unit time, cumulative transferred energy,
// and the energy-backflow measure

#pragma once

#include <utility>
#include <vector>

#include "sbflow/tcl2.hpp"

namespace sbflow::energetics {

// theta(t) computed twice: from the accumulated counting-field coefficients
// (theta) and from omega0 * d/dt rho00 + f(t) (theta_alt); the two routes
// agree up to integrator consistency. dq is the trapezoid of theta.
struct FlowTrace {
    std::vector<double> times;
    std::vector<double> theta;
    std::vector<double> theta_alt;
    std::vector<double> dq;
    std::vector<double> f_term;
    std::vector<double> markov_theta;
    double max_route_deviation = 0.0;
};

FlowTrace energy_flow(const tcl2::Trajectory& traj, const bath::BathParams& p,
                      const tcl2::SystemParams& s);

// Initial-state choice for the backflow maximization. Coherences never enter
// theta, so candidates are diagonal Gibbs states parameterized by an
// effective temperature; T_S = T_E maximizes the oscillations and is the
// default.
struct InitStateStrategy {
    bool scan = false;
    std::vector<double> temps;

    static InitStateStrategy fixed_equal_temps() { return {}; }
    static InitStateStrategy scan_temps(std::vector<double> candidates) {
        return {true, std::move(candidates)};
    }
};

struct BackflowResult {
    double value = 0.0;  // integral of the negative part of theta
    std::vector<std::pair<double, double>> negativity_intervals;
    double argmax_sys_temp = 0.0;  // effective temperature achieving the maximum
};

// Requires T_S >= T_E for every candidate so that the long-time flow is
// directed towards the environment and negativity is genuine backflow.
BackflowResult backflow_measure(const bath::BathParams& p, const tcl2::SystemParams& s,
                                const tcl2::TimeGrid& grid,
                                const InitStateStrategy& strategy =
                                    InitStateStrategy::fixed_equal_temps());

} // namespace sbflow::energetics
