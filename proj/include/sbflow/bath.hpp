// bath.hpp — Ohmic bath with exponential cutoff: spectral densities, noise and
// dissipation kernels, resonance condition

#pragma once

namespace sbflow::bath {

// Units: omega0 = k_B = hbar = 1. Frequencies and temperatures are in units
// of the system splitting, times in its inverse.
struct BathParams {
    double lambda = 0.1;   // dimensionless coupling strength
    double cutoff = 0.4;   // cutoff frequency Omega
    double temp = 1.0;     // bath temperature T_E

    // Throws DomainError on invalid fields; warns on stderr when the coupling
    // leaves the weak-coupling regime (lambda > 0.3).
    void validate(bool warn_strong_coupling = true) const;
};

struct KernelPair {
    double d1 = 0.0;
    double d2 = 0.0;
};

// J(w) = lambda * w * exp(-w/Omega), w >= 0.
double spectral_density(double omega, const BathParams& p);

// J_eff(w) = J(w) * coth(w / 2 T_E); the removable w -> 0 limit 2*lambda*T_E
// is returned below w = 1e-8.
double effective_spectral_density(double omega, const BathParams& p);

// Noise kernel D1(tau) = 2 * integral of J_eff(w) cos(w tau), in closed form
// through the complex trigamma function. Even in tau.
double noise_kernel(double tau, const BathParams& p);

// Same quantity by adaptive quadrature of the frequency integral (absolute
// tolerance 1e-10); serves as the independent cross-check of noise_kernel.
double noise_kernel_quadrature(double tau, const BathParams& p);

// Dissipation kernel D2(tau) = 4 lambda Omega^3 tau / (1 + (Omega tau)^2)^2.
// Odd in tau and independent of the temperature.
double dissipation_kernel(double tau, const BathParams& p);

// (d/dtau D1, d/dtau D2). D2' is analytic; D1' uses a Richardson-extrapolated
// central difference of the closed form (step 1e-5).
KernelPair kernel_time_derivatives(double tau, const BathParams& p);

// d/dw J_eff(w) evaluated at w = omega0. Vanishes exactly on the resonance
// curve below.
double resonance_deviation(const BathParams& p, double omega0);

// Omega_res(T_E) = T_E / (T_E/omega0 - csch(omega0/T_E)), the cutoff at which
// J_eff is locally flat at omega0.
double resonance_curve(double bath_temp, double omega0);

// Golden-rule rate Gamma = 2 pi J(omega0).
double markov_rate(const BathParams& p, double omega0);

} // namespace sbflow::bath
