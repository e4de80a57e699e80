// quadrature.hpp — adaptive Gauss-Kronrod integration on finite intervals

#pragma once

#include <functional>

namespace sbflow::quadrature {

struct Options {
    double abs_tol = 1e-10;
    int max_intervals = 4000;
};

// Adaptive 7-15 Gauss-Kronrod bisection until the summed error estimate falls
// below abs_tol. Throws ConvergenceError when the interval budget runs out.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

// Same, but the interval is first split at multiples of `period` so that each
// panel covers at most one oscillation; the tolerance is distributed over the
// panels proportionally to their width.
double integrate_periodic_split(const std::function<double(double)>& f, double a, double b,
                                double period, const Options& opts = {});

} // namespace sbflow::quadrature
