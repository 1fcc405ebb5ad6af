#include "qprobe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace qprobe::quad {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

double magnitude(double v) { return std::abs(v); }
double magnitude(Complex v) { return std::abs(v); }

template <class T>
struct Segment {
    double a, b;
    T value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> kronrod_segment(const F& f, double a, double b) {
    // Boost stores the non-negative half of the symmetric rule; abscissa[0] = 0.
    const auto& xk = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const T fc = f(mid);
    T kronrod = fc * wk[0];
    T gauss{};
    // Odd kronrod indices coincide with the Gauss nodes; Gauss-7 includes the centre.
    gauss = fc * wg[0];
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double dx = half * xk[i];
        const T sum = f(mid - dx) + f(mid + dx);
        kronrod += wk[i] * sum;
        if (i % 2 == 0) gauss += wg[i / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, magnitude(kronrod - gauss)};
}

template <class T, class F>
Result<T> adaptive(const F& f, std::span<const double> breakpoints, const Options& opts) {
    if (breakpoints.size() < 2) throw std::invalid_argument("integrate: need at least two breakpoints");
    std::priority_queue<Segment<T>> heap;
    T total{};
    double err = 0.0;
    int evals = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] == breakpoints[i]) continue;
        auto seg = kronrod_segment<T>(f, breakpoints[i], breakpoints[i + 1]);
        evals += 15;
        total += seg.value;
        err += seg.error;
        heap.push(seg);
    }
    int subdivisions = 0;
    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * magnitude(total)); };
    while (!heap.empty() && err > target()) {
        if (subdivisions >= opts.max_subdivisions) {
            throw ConvergenceError("adaptive quadrature did not converge: error estimate " +
                                       std::to_string(err) + " after " + std::to_string(subdivisions) +
                                       " subdivisions",
                                   err);
        }
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            throw ConvergenceError("adaptive quadrature: interval collapsed at x = " + std::to_string(mid),
                                   err);
        }
        const auto left = kronrod_segment<T>(f, worst.a, mid);
        const auto right = kronrod_segment<T>(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }
    // Re-sum to limit accumulated cancellation from the incremental updates.
    T resum{};
    double reerr = 0.0;
    while (!heap.empty()) {
        resum += heap.top().value;
        reerr += heap.top().error;
        heap.pop();
    }
    return {resum, reerr, evals};
}

}  // namespace

Result<double> integrate(const std::function<double(double)>& f, double a, double b, const Options& opts) {
    const double pts[2] = {a, b};
    return adaptive<double>(f, pts, opts);
}

Result<Complex> integrate(const std::function<Complex(double)>& f, double a, double b, const Options& opts) {
    const double pts[2] = {a, b};
    return adaptive<Complex>(f, pts, opts);
}

Result<double> integrate_panels(const std::function<double(double)>& f, std::span<const double> breakpoints,
                                const Options& opts) {
    return adaptive<double>(f, breakpoints, opts);
}

Result<Complex> integrate_panels(const std::function<Complex(double)>& f, std::span<const double> breakpoints,
                                 const Options& opts) {
    return adaptive<Complex>(f, breakpoints, opts);
}

Rule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) p0 = 1.0;
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace qprobe::quad
