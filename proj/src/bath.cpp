#include "sbflow/bath.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>

#include "sbflow/errors.hpp"
#include "sbflow/quadrature.hpp"
#include "sbflow/specfun.hpp"

namespace sbflow::bath {

void BathParams::validate(bool warn_strong_coupling) const {
    if (!(lambda >= 0.0)) {
        throw DomainError("BathParams: coupling strength must be non-negative");
    }
    if (!(cutoff > 0.0)) {
        throw DomainError("BathParams: cutoff frequency must be positive");
    }
    if (!(temp > 0.0)) {
        throw DomainError("BathParams: bath temperature must be positive");
    }
    if (warn_strong_coupling && lambda > 0.3) {
        std::cerr << "sbflow: warning: lambda = " << lambda
                  << " is outside the weak-coupling regime (> 0.3); second-order"
                     " coefficients may be unreliable\n";
    }
}

double spectral_density(double omega, const BathParams& p) {
    if (omega < 0.0) {
        throw DomainError("spectral_density: omega must be non-negative");
    }
    return p.lambda * omega * std::exp(-omega / p.cutoff);
}

double effective_spectral_density(double omega, const BathParams& p) {
    if (omega < 0.0) {
        throw DomainError("effective_spectral_density: omega must be non-negative");
    }
    if (omega < 1e-8) {
        // removable singularity: w * coth(w/2T) -> 2T
        return 2.0 * p.lambda * p.temp;
    }
    return spectral_density(omega, p) / std::tanh(0.5 * omega / p.temp);
}

double noise_kernel(double tau, const BathParams& p) {
    if (p.lambda == 0.0) return 0.0;
    const double x = p.cutoff * tau;
    const double den = 1.0 + x * x;
    const double vacuum_part = p.cutoff * p.cutoff * (x * x - 1.0) / (den * den);
    const std::complex<double> arg(p.temp / p.cutoff, p.temp * tau);
    const double thermal_part = 2.0 * p.temp * p.temp * specfun::trigamma(arg).real();
    return 2.0 * p.lambda * (vacuum_part + thermal_part);
}

double noise_kernel_quadrature(double tau, const BathParams& p) {
    if (p.lambda == 0.0) return 0.0;
    // The exponential cutoff and the thermal factor both decay; beyond
    // omega_max the tail is below the 1e-10 tolerance budget.
    const double omega_max = std::max({30.0 * p.cutoff, 20.0 * p.temp, 50.0});
    auto integrand = [&](double w) {
        return effective_spectral_density(w, p) * std::cos(w * tau);
    };
    quadrature::Options opts;
    opts.abs_tol = 0.5e-10;
    opts.max_intervals = 20000;
    const double abs_tau = std::abs(tau);
    if (abs_tau * omega_max < 2.0 * M_PI) {
        return 2.0 * quadrature::integrate(integrand, 0.0, omega_max, opts);
    }
    const double period = 2.0 * M_PI / abs_tau;
    return 2.0 * quadrature::integrate_periodic_split(integrand, 0.0, omega_max, period, opts);
}

double dissipation_kernel(double tau, const BathParams& p) {
    const double x = p.cutoff * tau;
    const double den = 1.0 + x * x;
    return 4.0 * p.lambda * p.cutoff * p.cutoff * p.cutoff * tau / (den * den);
}

KernelPair kernel_time_derivatives(double tau, const BathParams& p) {
    KernelPair out;
    const double x = p.cutoff * tau;
    const double den = 1.0 + x * x;
    const double omega3 = p.cutoff * p.cutoff * p.cutoff;
    out.d2 = 4.0 * p.lambda * omega3 * (1.0 - 3.0 * x * x) / (den * den * den);

    // D1' by two central differences combined with one Richardson step.
    const double h = 1e-5;
    const double phi_h = (noise_kernel(tau + h, p) - noise_kernel(tau - h, p)) / (2.0 * h);
    const double phi_h2 = (noise_kernel(tau + 0.5 * h, p) - noise_kernel(tau - 0.5 * h, p)) / h;
    out.d1 = (4.0 * phi_h2 - phi_h) / 3.0;
    return out;
}

double resonance_deviation(const BathParams& p, double omega0) {
    if (!(omega0 > 0.0)) {
        throw DomainError("resonance_deviation: omega0 must be positive");
    }
    const double x = 0.5 * omega0 / p.temp;
    const double coth = 1.0 / std::tanh(x);
    const double csch = 1.0 / std::sinh(x);
    return p.lambda * std::exp(-omega0 / p.cutoff) *
           ((1.0 - omega0 / p.cutoff) * coth - x * csch * csch);
}

double resonance_curve(double bath_temp, double omega0) {
    if (!(bath_temp > 0.0) || !(omega0 > 0.0)) {
        throw DomainError("resonance_curve: temperature and omega0 must be positive");
    }
    // sinh x > x guarantees a positive denominator for every T_E > 0.
    const double den = bath_temp / omega0 - specfun::csch(omega0 / bath_temp);
    if (!(den > 0.0)) {
        throw DomainError("resonance_curve: non-positive denominator");
    }
    return bath_temp / den;
}

double markov_rate(const BathParams& p, double omega0) {
    if (!(omega0 > 0.0)) {
        throw DomainError("markov_rate: omega0 must be positive");
    }
    return 2.0 * M_PI * spectral_density(omega0, p);
}

} // namespace sbflow::bath
