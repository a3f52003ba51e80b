#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dnpairs {

/// Adaptive Gauss7/Kronrod15 integration of f over [a, b] to absolute
/// tolerance abs_tol. Throws when the interval stack overflows without
/// convergence.
template <typename F>
double integrate(F&& f, double a, double b, double abs_tol) {
    // Kronrod-15 nodes with Gauss-7 and Kronrod weights.
    static const double node[8] = {
        0.000000000000000, 0.405845151377397, 0.741531185599394, 0.949107912342759,
        0.207784955007898, 0.586087235467691, 0.864864423359769, 0.991455371120813};
    static const double wg[8] = {
        0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870,
        0, 0, 0, 0};
    static const double wk[8] = {
        0.209482141084728, 0.190350578064785, 0.140653259715525, 0.063092092629979,
        0.204432940075298, 0.169004726639267, 0.104790010322250, 0.022935322010529};

    auto g7k15 = [&](double lo, double hi, double& err) {
        double mid = 0.5 * (lo + hi);
        double half = 0.5 * (hi - lo);
        double y0 = f(mid);
        double g = wg[0] * y0, k = wk[0] * y0;
        for (int i = 1; i < 8; ++i) {
            double dx = half * node[i];
            double y = f(mid + dx) + f(mid - dx);
            g += wg[i] * y;
            k += wk[i] * y;
        }
        g *= half;
        k *= half;
        err = std::abs(k - g);  // conservative: |K15 - G7| overestimates the K15 error
        return k;
    };

    struct Interval {
        double lo, hi;
    };
    std::vector<Interval> stack{{a, b}};
    double sum = 0;
    size_t work = 0;
    const size_t max_work = 4'000'000;
    while (!stack.empty()) {
        if (++work > max_work) throw std::runtime_error("integrate: failed to converge");
        auto [lo, hi] = stack.back();
        stack.pop_back();
        double err;
        double val = g7k15(lo, hi, err);
        double local_tol = abs_tol * (hi - lo) / (b - a);
        double mid = 0.5 * (lo + hi);
        if (err <= local_tol || mid <= lo || mid >= hi) {
            sum += val;
        } else {
            stack.push_back({lo, mid});
            stack.push_back({mid, hi});
        }
    }
    return sum;
}

}  // namespace dnpairs
