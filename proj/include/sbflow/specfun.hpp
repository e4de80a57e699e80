// specfun.hpp — trigamma on the complex half-plane plus small thermal helpers

#pragma once

#include <complex>

namespace sbflow::specfun {

// psi'(z), the derivative of the Euler digamma function, for complex z away
// from the poles at 0, -1, -2, ...  Accurate to >= 12 significant digits for
// Re z > 0 (recurrence shift followed by the Bernoulli asymptotic series).
std::complex<double> trigamma(std::complex<double> z);
double trigamma(double x);

// Bose-Einstein occupation 1/(exp(omega/T) - 1), omega > 0, T > 0.
double bose_occupation(double omega, double temperature);

// 1/sinh(x), x != 0.
double csch(double x);

} // namespace sbflow::specfun
