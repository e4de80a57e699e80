#include "sbflow/series.hpp"

#include <cmath>

#include "sbflow/errors.hpp"

namespace sbflow::series {

namespace {

void check_series(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size()) {
        throw InputError("series: time and value arrays differ in length");
    }
    if (t.size() < 2) {
        throw InputError("series: need at least two samples");
    }
}

// Negative-part contribution of one panel, splitting at the zero crossing.
double panel_negative_part(double t0, double y0, double t1, double y1) {
    if (y0 >= 0.0 && y1 >= 0.0) return 0.0;
    if (y0 <= 0.0 && y1 <= 0.0) return -0.5 * (y0 + y1) * (t1 - t0);
    const double tc = t0 + (t1 - t0) * y0 / (y0 - y1);
    if (y0 < 0.0) return -0.5 * y0 * (tc - t0);
    return -0.5 * y1 * (t1 - tc);
}

} // namespace

SignedPartResult negative_part(const std::vector<double>& t, const std::vector<double>& y,
                               double eps) {
    check_series(t, y);
    SignedPartResult out;

    bool below = false;
    for (double v : y) {
        if (v < -eps) {
            below = true;
            break;
        }
    }
    if (!below) return out;  // round-off never counts as an excursion

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        total += panel_negative_part(t[i], y[i], t[i + 1], y[i + 1]);
    }
    out.value = total;

    // maximal runs with y < -eps, boundaries refined at the zero crossings
    const std::size_t n = y.size();
    std::size_t i = 0;
    while (i < n) {
        if (!(y[i] < -eps)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && y[j + 1] < -eps) ++j;
        double start = t[i];
        if (i > 0 && y[i - 1] >= 0.0) {
            start = t[i - 1] + (t[i] - t[i - 1]) * y[i - 1] / (y[i - 1] - y[i]);
        } else if (i > 0) {
            start = t[i - 1];
        }
        double end = t[j];
        if (j + 1 < n && y[j + 1] >= 0.0) {
            end = t[j] + (t[j + 1] - t[j]) * y[j] / (y[j] - y[j + 1]);
        } else if (j + 1 < n) {
            end = t[j + 1];
        }
        out.intervals.emplace_back(start, end);
        i = j + 1;
    }
    return out;
}

SignedPartResult positive_part(const std::vector<double>& t, const std::vector<double>& y,
                               double eps) {
    std::vector<double> flipped(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) flipped[i] = -y[i];
    return negative_part(t, flipped, eps);
}

std::vector<double> running_negative_part(const std::vector<double>& t,
                                          const std::vector<double>& y) {
    check_series(t, y);
    std::vector<double> out(y.size(), 0.0);
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        out[i + 1] = out[i] + panel_negative_part(t[i], y[i], t[i + 1], y[i + 1]);
    }
    return out;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
    check_series(t, y);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        sum += 0.5 * (y[i] + y[i + 1]) * (t[i + 1] - t[i]);
    }
    return sum;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& t,
                                         const std::vector<double>& y) {
    check_series(t, y);
    std::vector<double> out(y.size(), 0.0);
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        out[i + 1] = out[i] + 0.5 * (y[i] + y[i + 1]) * (t[i + 1] - t[i]);
    }
    return out;
}

std::vector<double> centered_difference(const std::vector<double>& t,
                                        const std::vector<double>& y) {
    check_series(t, y);
    const std::size_t n = y.size();
    std::vector<double> out(n);
    out[0] = (y[1] - y[0]) / (t[1] - t[0]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out[i] = (y[i + 1] - y[i - 1]) / (t[i + 1] - t[i - 1]);
    }
    out[n - 1] = (y[n - 1] - y[n - 2]) / (t[n - 1] - t[n - 2]);
    return out;
}

} // namespace sbflow::series
