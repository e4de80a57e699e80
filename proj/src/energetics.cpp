#include "sbflow/energetics.hpp"

#include <algorithm>
#include <cmath>

#include "sbflow/errors.hpp"
#include "sbflow/series.hpp"
#include "sbflow/specfun.hpp"

namespace sbflow::energetics {

namespace {

constexpr double kNegativityEps = 1e-12;  // in units of omega0

} // namespace

FlowTrace energy_flow(const tcl2::Trajectory& traj, const bath::BathParams& p,
                      const tcl2::SystemParams& s) {
    const std::size_t n = traj.size();
    if (n < 2) {
        throw InputError("energy_flow: trajectory must contain at least two samples");
    }

    FlowTrace out;
    out.times.resize(n);
    out.theta.resize(n);
    out.theta_alt.resize(n);
    out.f_term.resize(n);
    out.markov_theta.resize(n);

    const double rho00_0 = traj[0].state.p0;
    const double n_bose = p.lambda == 0.0 ? 0.0 : specfun::bose_occupation(s.omega0, p.temp);
    const double rho_inf = (1.0 + n_bose) / (1.0 + 2.0 * n_bose);
    const double lt_rate = bath::markov_rate(p, s.omega0) * (1.0 + 2.0 * n_bose);

    for (std::size_t i = 0; i < n; ++i) {
        const tcl2::TrajectoryPoint& pt = traj[i];
        const double rho00 = pt.state.p0;
        const tcl2::Coefficients& c = pt.coeffs;

        out.times[i] = pt.t;
        out.theta[i] = (c.w_plus - c.w_minus) * rho00 - c.w_plus;

        const double drho00 = c.a_zz * rho00 - c.a_minus;
        const double delta_p = 1.0 - 2.0 * rho00;  // rho11 - rho00
        const double sinw = std::sin(s.omega0 * pt.t);
        const double cosw = std::cos(s.omega0 * pt.t);
        out.f_term[i] = -delta_p * pt.d1 * sinw + pt.d2 * cosw;
        out.theta_alt[i] = s.omega0 * drho00 + out.f_term[i];

        out.markov_theta[i] =
            s.omega0 * lt_rate * (rho_inf - rho00_0) * std::exp(-lt_rate * pt.t);

        out.max_route_deviation =
            std::max(out.max_route_deviation, std::abs(out.theta[i] - out.theta_alt[i]));
    }
    out.dq = series::cumulative_trapezoid(out.times, out.theta);
    return out;
}

BackflowResult backflow_measure(const bath::BathParams& p, const tcl2::SystemParams& s,
                                const tcl2::TimeGrid& grid, const InitStateStrategy& strategy) {
    p.validate();
    grid.validate();

    std::vector<double> candidates =
        strategy.scan ? strategy.temps : std::vector<double>{p.temp};
    if (candidates.empty()) {
        throw PreconditionError("backflow_measure: empty candidate list");
    }
    for (double t_sys : candidates) {
        if (!(t_sys >= p.temp)) {
            throw PreconditionError(
                "backflow_measure: every candidate must satisfy T_S >= T_E");
        }
    }

    BackflowResult best;
    bool first = true;
    for (double t_sys : candidates) {
        tcl2::SystemParams sys = s;
        sys.sys_temp = t_sys;
        const tcl2::QubitState init = tcl2::QubitState::gibbs(sys);
        const tcl2::Trajectory traj = tcl2::propagate(p, sys, init, grid);
        const FlowTrace flow = energy_flow(traj, p, sys);
        const series::SignedPartResult part =
            series::negative_part(flow.times, flow.theta, kNegativityEps * s.omega0);
        if (first || part.value > best.value) {
            best.value = part.value;
            best.negativity_intervals = part.intervals;
            best.argmax_sys_temp = t_sys;
            first = false;
        }
    }
    return best;
}

} // namespace sbflow::energetics
