// tcl2.hpp — second-order time-convolutionless coefficients and propagation of
// the reduced qubit state, plus the long-time (Born-Markov) reference dynamics

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sbflow/bath.hpp"

namespace sbflow::tcl2 {

struct SystemParams {
    double omega0 = 1.0;    // level splitting; fixes the unit system
    double sys_temp = 5.0;  // effective initial temperature T_S; +inf gives rho00 = 1/2

    void validate() const;
};

// Reduced state as ground population and coherence rho01; rho10 and rho11
// follow from hermiticity and unit trace, so both are preserved exactly.
struct QubitState {
    double p0 = 1.0;                  // rho00
    std::complex<double> coh{0.0, 0.0};  // rho01

    double p1() const { return 1.0 - p0; }
    double bloch_x() const { return 2.0 * coh.real(); }
    double bloch_y() const { return -2.0 * coh.imag(); }
    double bloch_z() const { return 1.0 - 2.0 * p0; }  // rho11 - rho00
    double bloch_norm() const;

    static QubitState from_bloch(double x, double y, double z);
    // Diagonal Gibbs state at the effective temperature s.sys_temp.
    static QubitState gibbs(const SystemParams& s);

    void validate() const;
};

// Time-integrated generator entries, all zero at t = 0. a_zz = a_plus +
// a_minus and a_minus = (a_zz + b_z)/2 hold to machine precision along any
// trajectory. A accumulates D1(tau) e^{-i omega0 tau} and drives the
// coherence block; w_plus/w_minus carry the counting-field derivative that
// yields the energy flow.
struct Coefficients {
    double a_plus = 0.0;
    double a_minus = 0.0;
    double a_zz = 0.0;
    double b_z = 0.0;
    std::complex<double> A{0.0, 0.0};
    double w_plus = 0.0;
    double w_minus = 0.0;
};

// Instantaneous accumulation rates of the entries above.
struct CoefficientRates {
    double a_plus = 0.0;
    double a_minus = 0.0;
    double a_zz = 0.0;
    double b_z = 0.0;
    std::complex<double> A{0.0, 0.0};
    double w_plus = 0.0;
    double w_minus = 0.0;
};

CoefficientRates coefficient_derivatives(double t, const bath::BathParams& p,
                                         const SystemParams& s);

struct TimeGrid {
    double t_max = 100.0;
    double dt = 0.01;

    void validate() const;
    std::size_t step_count() const;  // t_max/dt, which must be integral within rounding
};

struct TrajectoryPoint {
    double t = 0.0;
    QubitState state;
    Coefficients coeffs;
    double d1 = 0.0;  // noise kernel at t, reused downstream
    double d2 = 0.0;  // dissipation kernel at t
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    double max_bloch_norm = 0.0;

    std::size_t size() const { return points.size(); }
    const TrajectoryPoint& operator[](std::size_t i) const { return points[i]; }
};

// Fixed-step RK4 on the augmented system (state + running coefficients),
// sampled at every grid step. Coherences are carried in the interaction
// picture, where the second-order generator reads
//   d/dt rho01 = -A(t) rho01 + e^{-2 i omega0 t} conj(A(t)) rho10;
// the e^{-2 i omega0 t} factor on the conjugate coupling makes this exactly
// unitarily equivalent to the Schroedinger-picture dynamics, so trace
// distances computed from these states are the physical ones.
Trajectory propagate(const bath::BathParams& p, const SystemParams& s,
                     const QubitState& init, const TimeGrid& grid);

// Same dynamics for several initial states sharing one coefficient
// integration; entry i is bit-identical to propagate(p, s, inits[i], grid).
std::vector<Trajectory> propagate_joint(const bath::BathParams& p, const SystemParams& s,
                                        const std::vector<QubitState>& inits,
                                        const TimeGrid& grid);

// Solution of d/dt rho00 = -Gamma(1+2n) rho00 + Gamma(1+n):
// rho_inf + (rho00_0 - rho_inf) exp(-Gamma(1+2n) t) with
// rho_inf = (1+n)/(1+2n) and n the Bose occupation at omega0. The transient
// amplitude carries the full offset rho00_0 - rho_inf.
double born_markov_population(double t, const bath::BathParams& p, const SystemParams& s,
                              double rho00_0);

// Long-time limits of the coefficient integrals. The imaginary part of A
// (a principal-value frequency shift) is not needed downstream and is set
// to zero.
Coefficients markov_limit_coefficients(const bath::BathParams& p, const SystemParams& s);

} // namespace sbflow::tcl2
