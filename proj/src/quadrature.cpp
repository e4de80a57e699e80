#include "sbflow/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "sbflow/errors.hpp"

namespace sbflow::quadrature {

namespace {

// 15-point Kronrod nodes and weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278,
};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    for (int j = 0; j < 3; ++j) {
        const double x = half * kXgk[2 * j + 1];
        const double fsum = f(center - x) + f(center + x);
        result_gauss += kWg[j] * fsum;
        result_kronrod += kWgk[2 * j + 1] * fsum;
    }
    for (int j = 0; j < 4; ++j) {
        const double x = half * kXgk[2 * j];
        const double fsum = f(center - x) + f(center + x);
        result_kronrod += kWgk[2 * j] * fsum;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = result_kronrod * half;
    p.error = std::abs(result_kronrod - result_gauss) * half;
    return p;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts) {
    if (a == b) return 0.0;

    std::priority_queue<Panel> panels;
    Panel whole = gauss_kronrod_15(f, a, b);
    double total_value = whole.value;
    double total_error = whole.error;
    panels.push(whole);
    int used = 1;

    while (total_error > opts.abs_tol) {
        if (used >= opts.max_intervals) {
            throw ConvergenceError("integrate: interval budget exceeded");
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw ConvergenceError("integrate: interval underflow before reaching tolerance");
        }
        const Panel left = gauss_kronrod_15(f, worst.a, mid);
        const Panel right = gauss_kronrod_15(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++used;
    }

    if (!std::isfinite(total_value)) {
        throw NumericsError("integrate: non-finite result");
    }
    return total_value;
}

double integrate_periodic_split(const std::function<double(double)>& f, double a, double b,
                                double period, const Options& opts) {
    if (a == b) return 0.0;
    const double span = b - a;
    if (!(period > 0.0) || period >= span) {
        return integrate(f, a, b, opts);
    }

    std::vector<double> cuts;
    cuts.push_back(a);
    for (double x = a + period; x < b; x += period) {
        cuts.push_back(x);
    }
    cuts.push_back(b);

    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Options panel_opts = opts;
        panel_opts.abs_tol = opts.abs_tol * (cuts[i + 1] - cuts[i]) / span;
        panel_opts.max_intervals = std::max(50, opts.max_intervals / static_cast<int>(cuts.size()));
        sum += integrate(f, cuts[i], cuts[i + 1], panel_opts);
    }
    return sum;
}

} // namespace sbflow::quadrature
