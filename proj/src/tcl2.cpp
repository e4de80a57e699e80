#include "sbflow/tcl2.hpp"

#include <array>
#include <cmath>
#include <iostream>
#include <string>

#include "sbflow/errors.hpp"
#include "sbflow/specfun.hpp"

namespace sbflow::tcl2 {

void SystemParams::validate() const {
    if (!(omega0 > 0.0)) {
        throw DomainError("SystemParams: omega0 must be positive");
    }
    if (!(sys_temp > 0.0)) {  // +inf is allowed
        throw DomainError("SystemParams: effective temperature must be positive");
    }
}

double QubitState::bloch_norm() const {
    const double x = bloch_x();
    const double y = bloch_y();
    const double z = bloch_z();
    return std::sqrt(x * x + y * y + z * z);
}

QubitState QubitState::from_bloch(double x, double y, double z) {
    QubitState s;
    s.p0 = 0.5 * (1.0 - z);
    s.coh = std::complex<double>(0.5 * x, -0.5 * y);
    return s;
}

QubitState QubitState::gibbs(const SystemParams& s) {
    s.validate();
    // p0 = 1/(1 + e^{-omega0/T_S}); T_S = +inf lands on 1/2.
    QubitState out;
    out.p0 = 1.0 / (1.0 + std::exp(-s.omega0 / s.sys_temp));
    out.coh = 0.0;
    return out;
}

void QubitState::validate() const {
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
        throw DomainError("QubitState: population outside [0, 1]");
    }
    if (!std::isfinite(coh.real()) || !std::isfinite(coh.imag())) {
        throw DomainError("QubitState: non-finite coherence");
    }
}

void TimeGrid::validate() const {
    if (!(t_max > 0.0)) {
        throw DomainError("TimeGrid: t_max must be positive");
    }
    if (!(dt > 0.0) || dt > t_max) {
        throw DomainError("TimeGrid: need 0 < dt <= t_max");
    }
    const double ratio = t_max / dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-6) {
        throw DomainError("TimeGrid: t_max must be an integer multiple of dt");
    }
}

std::size_t TimeGrid::step_count() const {
    return static_cast<std::size_t>(std::llround(t_max / dt));
}

namespace {

// Bath kernel values entering the generator at one instant.
struct Drive {
    double d1, d2, d1dot, d2dot, cosw, sinw;
};

Drive eval_drive(double t, const bath::BathParams& p, const SystemParams& s) {
    Drive d;
    d.d1 = bath::noise_kernel(t, p);
    d.d2 = bath::dissipation_kernel(t, p);
    const bath::KernelPair dots = bath::kernel_time_derivatives(t, p);
    d.d1dot = dots.d1;
    d.d2dot = dots.d2;
    d.cosw = std::cos(s.omega0 * t);
    d.sinw = std::sin(s.omega0 * t);
    return d;
}

// Coefficient block layout for the augmented ODE.
enum CoeffIndex { kAPlus, kAMinus, kAzz, kBz, kARe, kAIm, kWPlus, kWMinus, kNCoeff };
using CoeffVec = std::array<double, kNCoeff>;

enum StateIndex { kP0, kCohRe, kCohIm, kNState };
using StateVec = std::array<double, kNState>;

CoeffVec coeff_rhs(const Drive& d) {
    CoeffVec r;
    r[kAzz] = -2.0 * d.d1 * d.cosw;
    r[kBz] = -2.0 * d.d2 * d.sinw;
    r[kAMinus] = 0.5 * (r[kAzz] + r[kBz]);
    r[kAPlus] = r[kAzz] - r[kAMinus];
    r[kARe] = d.d1 * d.cosw;
    r[kAIm] = -d.d1 * d.sinw;
    r[kWPlus] = d.d1dot * d.sinw - d.d2dot * d.cosw;
    r[kWMinus] = -d.d1dot * d.sinw - d.d2dot * d.cosw;
    return r;
}

StateVec state_rhs(const StateVec& s, const CoeffVec& c, const Drive& d) {
    StateVec r;
    r[kP0] = c[kAzz] * s[kP0] - c[kAMinus];
    // Interaction picture: d/dt rho01 = -A rho01 + e^{-2 i omega0 t} conj(A) rho10
    // with rho10 = conj(rho01).
    const std::complex<double> A(c[kARe], c[kAIm]);
    const std::complex<double> coh(s[kCohRe], s[kCohIm]);
    const double cos2 = d.cosw * d.cosw - d.sinw * d.sinw;
    const double sin2 = 2.0 * d.sinw * d.cosw;
    const std::complex<double> phase(cos2, -sin2);
    const std::complex<double> dcoh = -A * coh + phase * std::conj(A) * std::conj(coh);
    r[kCohRe] = dcoh.real();
    r[kCohIm] = dcoh.imag();
    return r;
}

template <std::size_t N>
std::array<double, N> axpy(const std::array<double, N>& y, double a,
                           const std::array<double, N>& x) {
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + a * x[i];
    return out;
}

template <std::size_t N>
void rk4_update(std::array<double, N>& y, double h, const std::array<double, N>& k1,
                const std::array<double, N>& k2, const std::array<double, N>& k3,
                const std::array<double, N>& k4) {
    for (std::size_t i = 0; i < N; ++i) {
        y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

Coefficients to_coefficients(const CoeffVec& c) {
    Coefficients out;
    out.a_plus = c[kAPlus];
    out.a_minus = c[kAMinus];
    out.a_zz = c[kAzz];
    out.b_z = c[kBz];
    out.A = std::complex<double>(c[kARe], c[kAIm]);
    out.w_plus = c[kWPlus];
    out.w_minus = c[kWMinus];
    return out;
}

QubitState to_state(const StateVec& s) {
    QubitState out;
    out.p0 = s[kP0];
    out.coh = std::complex<double>(s[kCohRe], s[kCohIm]);
    return out;
}

void check_finite(double t, const CoeffVec& c, const StateVec& s) {
    for (double v : c) {
        if (!std::isfinite(v)) {
            throw NumericsError("propagate: non-finite coefficient at t = " + std::to_string(t));
        }
    }
    for (double v : s) {
        if (!std::isfinite(v)) {
            throw NumericsError("propagate: non-finite state component at t = " + std::to_string(t));
        }
    }
}

} // namespace

CoefficientRates coefficient_derivatives(double t, const bath::BathParams& p,
                                         const SystemParams& s) {
    if (t < 0.0) {
        throw DomainError("coefficient_derivatives: t must be non-negative");
    }
    const Drive d = eval_drive(t, p, s);
    const CoeffVec r = coeff_rhs(d);
    CoefficientRates out;
    out.a_plus = r[kAPlus];
    out.a_minus = r[kAMinus];
    out.a_zz = r[kAzz];
    out.b_z = r[kBz];
    out.A = std::complex<double>(r[kARe], r[kAIm]);
    out.w_plus = r[kWPlus];
    out.w_minus = r[kWMinus];
    return out;
}

std::vector<Trajectory> propagate_joint(const bath::BathParams& p, const SystemParams& s,
                                        const std::vector<QubitState>& inits,
                                        const TimeGrid& grid) {
    p.validate();
    s.validate();
    grid.validate();
    if (inits.empty()) {
        throw InputError("propagate: at least one initial state required");
    }
    for (const QubitState& st : inits) st.validate();

    const std::size_t n_steps = grid.step_count();
    const double h = grid.dt;
    const std::size_t n_traj = inits.size();

    CoeffVec coeffs{};
    std::vector<StateVec> states(n_traj);
    for (std::size_t i = 0; i < n_traj; ++i) {
        states[i] = {inits[i].p0, inits[i].coh.real(), inits[i].coh.imag()};
    }

    std::vector<Trajectory> out(n_traj);
    for (Trajectory& tr : out) tr.points.reserve(n_steps + 1);

    auto record = [&](double t, const Drive& d) {
        const Coefficients c = to_coefficients(coeffs);
        for (std::size_t i = 0; i < n_traj; ++i) {
            check_finite(t, coeffs, states[i]);
            TrajectoryPoint pt;
            pt.t = t;
            pt.state = to_state(states[i]);
            pt.coeffs = c;
            pt.d1 = d.d1;
            pt.d2 = d.d2;
            out[i].max_bloch_norm = std::max(out[i].max_bloch_norm, pt.state.bloch_norm());
            out[i].points.push_back(pt);
        }
    };

    Drive d_start = eval_drive(0.0, p, s);
    record(0.0, d_start);

    std::vector<StateVec> k1(n_traj), k2(n_traj), k3(n_traj), k4(n_traj);
    for (std::size_t step = 0; step < n_steps; ++step) {
        const double t0 = static_cast<double>(step) * h;
        const double t1 = static_cast<double>(step + 1) * h;
        const Drive d_mid = eval_drive(t0 + 0.5 * h, p, s);
        const Drive d_end = eval_drive(t1, p, s);

        // Joint RK4; the coefficient block is independent of the states, so
        // its stage values feed every state block.
        const CoeffVec k1c = coeff_rhs(d_start);
        const CoeffVec c2 = axpy(coeffs, 0.5 * h, k1c);
        const CoeffVec k2c = coeff_rhs(d_mid);
        const CoeffVec c3 = axpy(coeffs, 0.5 * h, k2c);
        const CoeffVec k3c = coeff_rhs(d_mid);
        const CoeffVec c4 = axpy(coeffs, h, k3c);
        const CoeffVec k4c = coeff_rhs(d_end);

        for (std::size_t i = 0; i < n_traj; ++i) {
            k1[i] = state_rhs(states[i], coeffs, d_start);
            k2[i] = state_rhs(axpy(states[i], 0.5 * h, k1[i]), c2, d_mid);
            k3[i] = state_rhs(axpy(states[i], 0.5 * h, k2[i]), c3, d_mid);
            k4[i] = state_rhs(axpy(states[i], h, k3[i]), c4, d_end);
            rk4_update(states[i], h, k1[i], k2[i], k3[i], k4[i]);
        }
        rk4_update(coeffs, h, k1c, k2c, k3c, k4c);

        d_start = d_end;
        record(t1, d_end);
    }

    for (std::size_t i = 0; i < n_traj; ++i) {
        if (out[i].max_bloch_norm > 1.0 + 1e-9) {
            // Transient positivity violations can happen at second order; they
            // are reported, never clipped.
            std::cerr << "sbflow: warning: Bloch norm reached " << out[i].max_bloch_norm
                      << " (> 1) along trajectory " << i << "\n";
        }
    }
    return out;
}

Trajectory propagate(const bath::BathParams& p, const SystemParams& s, const QubitState& init,
                     const TimeGrid& grid) {
    std::vector<Trajectory> result = propagate_joint(p, s, {init}, grid);
    return std::move(result.front());
}

double born_markov_population(double t, const bath::BathParams& p, const SystemParams& s,
                              double rho00_0) {
    if (t < 0.0) {
        throw DomainError("born_markov_population: t must be non-negative");
    }
    if (p.lambda == 0.0) return rho00_0;
    const double n = specfun::bose_occupation(s.omega0, p.temp);
    const double rho_inf = (1.0 + n) / (1.0 + 2.0 * n);
    const double rate = bath::markov_rate(p, s.omega0) * (1.0 + 2.0 * n);
    return rho_inf + (rho00_0 - rho_inf) * std::exp(-rate * t);
}

Coefficients markov_limit_coefficients(const bath::BathParams& p, const SystemParams& s) {
    const double gamma = bath::markov_rate(p, s.omega0);
    const double n = p.lambda == 0.0 ? 0.0 : specfun::bose_occupation(s.omega0, p.temp);
    Coefficients c;
    c.a_zz = -gamma * (1.0 + 2.0 * n);
    c.b_z = -gamma;
    c.a_minus = -gamma * (1.0 + n);
    c.a_plus = -gamma * n;
    c.w_plus = -s.omega0 * gamma * (1.0 + n);
    c.w_minus = s.omega0 * gamma * n;
    c.A = std::complex<double>(-0.5 * c.a_zz, 0.0);
    return c;
}

} // namespace sbflow::tcl2
