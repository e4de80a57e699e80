#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "sbflow/bath.hpp"
#include "sbflow/errors.hpp"
#include "sbflow/quadrature.hpp"
#include "sbflow/specfun.hpp"
#include "sbflow/tcl2.hpp"

using namespace sbflow;

namespace {

const double kPi = 3.14159265358979323846;

bool kernels_agree(double closed, double quad) {
    // relative agreement for O(1) values, absolute for the decayed tail
    if (std::abs(closed) < 1e-3) return std::abs(closed - quad) < 1e-9;
    return std::abs(closed - quad) < 1e-6 * std::abs(closed);
}

} // namespace

TEST_CASE("spectral density") {
    bath::BathParams p{0.1, 0.4, 1.0};
    CHECK(bath::spectral_density(0.0, p) == 0.0);
    CHECK(bath::spectral_density(1.0, p) == doctest::Approx(0.1 * std::exp(-2.5)).epsilon(1e-15));
    CHECK(bath::spectral_density(1.0, p) == doctest::Approx(0.00820850).epsilon(1e-6));
    // single interior maximum at w = cutoff
    const double at_peak = bath::spectral_density(p.cutoff, p);
    CHECK(at_peak > bath::spectral_density(p.cutoff * 0.99, p));
    CHECK(at_peak > bath::spectral_density(p.cutoff * 1.01, p));
    CHECK_THROWS_AS(bath::spectral_density(-0.1, p), DomainError);
}

TEST_CASE("effective spectral density") {
    bath::BathParams p{0.1, 0.4, 1.0};
    // w -> 0 limit is 2 lambda T_E
    CHECK(bath::effective_spectral_density(1e-12, p) == doctest::Approx(0.2).epsilon(1e-12));

    bath::BathParams cold{0.1, 0.4, 1e-6};
    CHECK(bath::effective_spectral_density(1.0, cold) ==
          doctest::Approx(bath::spectral_density(1.0, cold)).epsilon(1e-12));

    bath::BathParams hot{0.1, 0.4, 5.0};
    const double expected = 0.1 * std::exp(-2.5) / std::tanh(0.1);
    CHECK(bath::effective_spectral_density(1.0, hot) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(bath::effective_spectral_density(1.0, hot) ==
          doctest::Approx(0.082358466).epsilon(1e-7));
}

TEST_CASE("noise kernel closed form at tau = 0") {
    bath::BathParams p{0.1, 1.0, 1.0};
    // 2 lambda (-Omega^2 + 2 T^2 psi'(T/Omega)) = 0.2 (pi^2/3 - 1)
    const double expected = 0.2 * (kPi * kPi / 3.0 - 1.0);
    CHECK(bath::noise_kernel(0.0, p) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(kernels_agree(bath::noise_kernel(0.0, p), bath::noise_kernel_quadrature(0.0, p)));
}

TEST_CASE("noise kernel symmetry and high-temperature limit") {
    bath::BathParams p{0.1, 1.0, 1.0};
    CHECK(bath::noise_kernel(-0.7, p) == bath::noise_kernel(0.7, p));

    bath::BathParams hot{0.1, 1.0, 100.0};
    // classical limit 4 lambda T Omega / (1 + (Omega tau)^2)
    const double classical = 4.0 * 0.1 * 100.0 * 1.0 / 2.0;
    CHECK(bath::noise_kernel(1.0, hot) == doctest::Approx(classical).epsilon(0.005));
}

TEST_CASE("noise kernel against its quadrature oracle") {
    bath::BathParams p{0.1, 0.4, 1.0};
    CHECK(kernels_agree(bath::noise_kernel(0.5, p), bath::noise_kernel_quadrature(0.5, p)));

    // tau = 0 equals twice the plain integral of J_eff
    const double direct = 2.0 * quadrature::integrate(
                              [&](double w) { return bath::effective_spectral_density(w, p); },
                              0.0, 50.0, {1e-11, 20000});
    CHECK(bath::noise_kernel_quadrature(0.0, p) == doctest::Approx(direct).epsilon(1e-9));

    // decayed tail at large delay
    bath::BathParams unit{0.1, 1.0, 1.0};
    const double late = bath::noise_kernel_quadrature(50.0, unit);
    CHECK(std::abs(late) < 1e-3);
    CHECK(std::abs(late - bath::noise_kernel(50.0, unit)) < 1e-9);

    // spot grid over the parameter corners
    for (double tau : {0.0, 1.0, 20.0}) {
        for (double cutoff : {0.4, 5.0}) {
            for (double temp : {0.2, 5.0}) {
                bath::BathParams q{0.1, cutoff, temp};
                CAPTURE(tau);
                CAPTURE(cutoff);
                CAPTURE(temp);
                CHECK(kernels_agree(bath::noise_kernel(tau, q),
                                    bath::noise_kernel_quadrature(tau, q)));
            }
        }
    }
}

TEST_CASE("dissipation kernel") {
    bath::BathParams p{0.1, 1.0, 1.0};
    CHECK(bath::dissipation_kernel(0.0, p) == 0.0);
    CHECK(bath::dissipation_kernel(1.0, p) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(bath::dissipation_kernel(-2.0, p) == -bath::dissipation_kernel(2.0, p));

    for (double tau : {0.3, 1.0, 5.0}) {
        const double closed = bath::dissipation_kernel(tau, p);
        CHECK(std::abs(closed - testoracle::dissipation_kernel_quadrature(tau, p)) < 1e-8);
    }
}

TEST_CASE("kernel time derivatives") {
    bath::BathParams p{0.1, 0.4, 1.0};
    const bath::KernelPair at_zero = bath::kernel_time_derivatives(0.0, p);
    CHECK(at_zero.d1 == 0.0);  // even function
    CHECK(at_zero.d2 == doctest::Approx(4.0 * 0.1 * std::pow(0.4, 3)).epsilon(1e-14));

    const bath::KernelPair at_one = bath::kernel_time_derivatives(1.0, p);
    CHECK(std::abs(at_one.d1 - testoracle::noise_kernel_derivative_quadrature(1.0, p)) < 1e-6);

    // analytic D2' against a central difference
    const double h = 1e-6;
    const double fd =
        (bath::dissipation_kernel(1.0 + h, p) - bath::dissipation_kernel(1.0 - h, p)) / (2.0 * h);
    CHECK(at_one.d2 == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("resonance deviation and curve") {
    // the curve is defined by a vanishing deviation
    for (double temp : {0.5, 1.0, 2.0}) {
        const double omega_res = bath::resonance_curve(temp, 1.0);
        bath::BathParams p{0.1, omega_res, temp};
        CHECK(std::abs(bath::resonance_deviation(p, 1.0)) < 1e-10);
    }

    CHECK(bath::resonance_curve(1.0, 1.0) ==
          doctest::Approx(1.0 / (1.0 - 1.0 / std::sinh(1.0))).epsilon(1e-14));
    CHECK(bath::resonance_curve(1.0, 1.0) == doctest::Approx(6.7077).epsilon(1e-4));

    // high-temperature asymptote 6 T^2 / omega0
    CHECK(bath::resonance_curve(20.0, 1.0) == doctest::Approx(6.0 * 400.0).epsilon(0.02));

    // zero-temperature limit: deviation reduces to lambda (1 - w0/Omega) e^{-w0/Omega}
    for (double cutoff : {0.5, 1.0, 3.0}) {
        bath::BathParams cold{0.1, cutoff, 1e-4};
        const double expected = 0.1 * (1.0 - 1.0 / cutoff) * std::exp(-1.0 / cutoff);
        CHECK(bath::resonance_deviation(cold, 1.0) == doctest::Approx(expected).epsilon(1e-10));
    }

    bath::BathParams p{0.1, 0.4, 1.0};
    CHECK(bath::resonance_deviation(p, 1.0) < 0.0);  // omega0 beyond the J_eff peak
}

TEST_CASE("markov rate") {
    bath::BathParams p{0.1, 0.4, 1.0};
    CHECK(bath::markov_rate(p, 1.0) == doctest::Approx(2.0 * kPi * 0.1 * std::exp(-2.5)).epsilon(1e-15));
    CHECK(bath::markov_rate(p, 1.0) == doctest::Approx(0.0515755).epsilon(1e-5));

    bath::BathParams off{0.0, 0.4, 1.0};
    CHECK(bath::markov_rate(off, 1.0) == 0.0);

    bath::BathParams twice{0.2, 0.4, 1.0};
    CHECK(bath::markov_rate(twice, 1.0) == doctest::Approx(2.0 * bath::markov_rate(p, 1.0)));
}

TEST_CASE("long-time kernel integrals reach the golden-rule rates") {
    bath::BathParams p{0.1, 0.4, 1.0};
    tcl2::SystemParams s;
    const auto tab = testoracle::coefficient_tables(p, s, 200.0, 0.005);
    const double gamma = bath::markov_rate(p, 1.0);
    const double n = specfun::bose_occupation(1.0, p.temp);
    CHECK(tab.azz.back() == doctest::Approx(-gamma * (1.0 + 2.0 * n)).epsilon(0.01));
    CHECK(tab.bz.back() == doctest::Approx(-gamma).epsilon(0.01));
}

TEST_CASE("bath parameter validation") {
    CHECK_THROWS_AS((bath::BathParams{-0.1, 0.4, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((bath::BathParams{0.1, 0.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((bath::BathParams{0.1, 0.4, -1.0}.validate()), DomainError);
    CHECK_NOTHROW((bath::BathParams{0.0, 0.4, 1.0}.validate()));  // decoupled limit is legal
}
