#include "sbflow/nonmarkov.hpp"

#include <cmath>

#include "sbflow/errors.hpp"
#include "sbflow/series.hpp"

namespace sbflow::nonmarkov {

namespace {

constexpr double kRegrowthEps = 1e-12;

} // namespace

StatePair StatePair::canonical() {
    StatePair pair;
    pair.s1 = tcl2::QubitState::from_bloch(0.0, 1.0, 0.0);
    pair.s2 = tcl2::QubitState::from_bloch(0.0, -1.0, 0.0);
    return pair;
}

double trace_distance(const tcl2::QubitState& a, const tcl2::QubitState& b) {
    a.validate();
    b.validate();
    const double dx = a.bloch_x() - b.bloch_x();
    const double dy = a.bloch_y() - b.bloch_y();
    const double dz = a.bloch_z() - b.bloch_z();
    return 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz);
}

BLPResult blp_measure(const bath::BathParams& p, const tcl2::SystemParams& s,
                      const tcl2::TimeGrid& grid, const StatePair& pair) {
    const std::vector<tcl2::Trajectory> trajs =
        tcl2::propagate_joint(p, s, {pair.s1, pair.s2}, grid);
    const tcl2::Trajectory& t1 = trajs[0];
    const tcl2::Trajectory& t2 = trajs[1];

    BLPResult out;
    const std::size_t n = t1.size();
    out.times.resize(n);
    out.distance_trace.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.times[i] = t1[i].t;
        out.distance_trace[i] = trace_distance(t1[i].state, t2[i].state);
    }

    const std::vector<double> sigma = series::centered_difference(out.times, out.distance_trace);
    const series::SignedPartResult part = series::positive_part(out.times, sigma, kRegrowthEps);
    out.value = part.value;
    out.regrowth_intervals = part.intervals;
    return out;
}

BLPResult blp_closed_form(const bath::BathParams& p, const tcl2::TimeGrid& grid) {
    p.validate(false);
    grid.validate();
    const tcl2::SystemParams s;  // omega0 = 1 unit system
    const double omega0 = s.omega0;

    // coefficient tables on a refined grid, nodes at h/2 for the RK4 stages
    const std::size_t refine = 5;
    const std::size_t n_fine = grid.step_count() * refine;
    const double h = grid.dt / static_cast<double>(refine);
    std::vector<double> alpha(2 * n_fine + 1), beta(2 * n_fine + 1);
    alpha[0] = 0.0;
    beta[0] = 0.0;
    {
        double prev_c = bath::noise_kernel(0.0, p);  // D1 cos at tau = 0
        double prev_s = 0.0;
        for (std::size_t k = 1; k <= 2 * n_fine; ++k) {
            const double tau = 0.5 * h * static_cast<double>(k);
            const double d1 = bath::noise_kernel(tau, p);
            const double cur_c = d1 * std::cos(omega0 * tau);
            const double cur_s = d1 * std::sin(omega0 * tau);
            alpha[k] = alpha[k - 1] + 0.25 * h * (prev_c + cur_c);
            beta[k] = beta[k - 1] - 0.25 * h * (prev_s + cur_s);
            prev_c = cur_c;
            prev_s = cur_s;
        }
    }

    BLPResult out;
    out.times.reserve(grid.step_count() + 1);
    out.distance_trace.reserve(grid.step_count() + 1);
    out.times.push_back(0.0);
    out.distance_trace.push_back(1.0);

    // canonical pair difference: delta(0) = -i, D = |delta|
    double u = 0.0, v = -1.0;
    auto rhs = [&](double uu, double vv, double a, double b) {
        return std::pair<double, double>(-omega0 * vv,
                                         omega0 * uu - 2.0 * a * vv - 2.0 * b * uu);
    };

    double total = 0.0;
    double run_start_t = -1.0, run_start_d = 0.0;
    double prev_d = 1.0;
    bool ascending = false;
    for (std::size_t k = 0; k < n_fine; ++k) {
        const double a0 = alpha[2 * k], b0 = beta[2 * k];
        const double am = alpha[2 * k + 1], bm = beta[2 * k + 1];
        const double a1 = alpha[2 * k + 2], b1 = beta[2 * k + 2];
        const auto k1 = rhs(u, v, a0, b0);
        const auto k2 = rhs(u + 0.5 * h * k1.first, v + 0.5 * h * k1.second, am, bm);
        const auto k3 = rhs(u + 0.5 * h * k2.first, v + 0.5 * h * k2.second, am, bm);
        const auto k4 = rhs(u + h * k3.first, v + h * k3.second, a1, b1);
        u += h / 6.0 * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first);
        v += h / 6.0 * (k1.second + 2.0 * k2.second + 2.0 * k3.second + k4.second);
        const double t_next = 0.5 * h * static_cast<double>(2 * k + 2);
        const double d = std::hypot(u, v);
        if (!std::isfinite(d)) {
            throw NumericsError("blp_closed_form: non-finite distance");
        }

        // regrowth bookkeeping on the fine grid
        if (d > prev_d + 0.0) {
            total += d - prev_d;
            if (!ascending) {
                ascending = true;
                run_start_t = t_next - h;
                run_start_d = prev_d;
            }
        } else if (ascending) {
            ascending = false;
            if (prev_d - run_start_d > kRegrowthEps) {
                out.regrowth_intervals.emplace_back(run_start_t, t_next - h);
            }
        }
        prev_d = d;

        if ((k + 1) % refine == 0) {
            out.times.push_back(grid.dt * static_cast<double>((k + 1) / refine));
            out.distance_trace.push_back(d);
        }
    }
    if (ascending && prev_d - run_start_d > kRegrowthEps) {
        out.regrowth_intervals.emplace_back(run_start_t, out.times.back());
    }
    out.value = out.regrowth_intervals.empty() ? 0.0 : total;
    return out;
}

} // namespace sbflow::nonmarkov
