// series.hpp — integrals and derivatives of uniformly sampled time series

#pragma once

#include <utility>
#include <vector>

namespace sbflow::series {

struct SignedPartResult {
    double value = 0.0;
    // maximal runs where the series stays beyond the threshold, with the
    // bracketing zero crossings refined by linear interpolation
    std::vector<std::pair<double, double>> intervals;
};

// integral of max(-y, 0) dt, i.e. (|y| - y)/2, by trapezoid with one linear
// interpolation of each sign-change crossing. The result is clipped to zero
// (and intervals left empty) unless some sample lies below -eps, so that
// value > 0 iff a genuine excursion exists.
SignedPartResult negative_part(const std::vector<double>& t, const std::vector<double>& y,
                               double eps);

// integral of max(y, 0) dt, i.e. (|y| + y)/2, same conventions.
SignedPartResult positive_part(const std::vector<double>& t, const std::vector<double>& y,
                               double eps);

// running value of the negative-part integral at every sample
std::vector<double> running_negative_part(const std::vector<double>& t,
                                          const std::vector<double>& y);

double trapezoid(const std::vector<double>& t, const std::vector<double>& y);
std::vector<double> cumulative_trapezoid(const std::vector<double>& t,
                                         const std::vector<double>& y);

// centered differences in the interior, one-sided at the ends
std::vector<double> centered_difference(const std::vector<double>& t,
                                        const std::vector<double>& y);

} // namespace sbflow::series
