#include "sbflow/specfun.hpp"

#include <cmath>

#include "sbflow/errors.hpp"

namespace sbflow::specfun {

namespace {

// Bernoulli numbers B2, B4, ..., B12 for the asymptotic tail.
constexpr double kBernoulli[] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0,
};
constexpr double kShiftThreshold = 10.0;
constexpr double kPoleTol = 1e-12;

} // namespace

std::complex<double> trigamma(std::complex<double> z) {
    // Double poles at the non-positive integers.
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - std::complex<double>(nearest, 0.0)) < kPoleTol) {
        throw PoleError("trigamma: argument within tolerance of a non-positive integer pole");
    }

    // psi'(z) = psi'(z+1) + 1/z^2 until the asymptotic series applies.
    std::complex<double> shifted = 0.0;
    while (z.real() < kShiftThreshold) {
        shifted += 1.0 / (z * z);
        z += 1.0;
    }

    // psi'(z) ~ 1/z + 1/(2 z^2) + sum_k B_{2k} z^{-2k-1}
    const std::complex<double> w = 1.0 / z;
    const std::complex<double> w2 = w * w;
    std::complex<double> tail = kBernoulli[5];
    for (int k = 4; k >= 0; --k) {
        tail = tail * w2 + kBernoulli[k];
    }
    const std::complex<double> value = shifted + w + 0.5 * w2 + w * w2 * tail;
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw NumericsError("trigamma: non-finite result");
    }
    return value;
}

double trigamma(double x) {
    return trigamma(std::complex<double>(x, 0.0)).real();
}

double bose_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) {
        throw DomainError("bose_occupation: omega must be positive");
    }
    if (!(temperature > 0.0)) {
        throw DomainError("bose_occupation: temperature must be positive");
    }
    return 1.0 / std::expm1(omega / temperature);
}

double csch(double x) {
    if (x == 0.0) {
        throw DomainError("csch: singular at x = 0");
    }
    return 1.0 / std::sinh(x);
}

} // namespace sbflow::specfun
