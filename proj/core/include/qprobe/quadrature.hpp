// quadrature.hpp: adaptive Gauss–Kronrod integration and Gauss–Legendre rules

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qprobe/types.hpp"

namespace qprobe::quad {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int max_subdivisions = 4000;
};

template <class T>
struct Result {
    T value{};
    double error = 0.0;
    int evaluations = 0;
};

// Globally adaptive 7/15-point Gauss–Kronrod on [a, b]. The interval with the
// largest error estimate is bisected until the summed estimate drops below
// max(abs_tol, rel_tol * |value|). Throws ConvergenceError otherwise.
Result<double> integrate(const std::function<double(double)>& f, double a, double b,
                         const Options& opts = {});
Result<Complex> integrate(const std::function<Complex(double)>& f, double a, double b,
                          const Options& opts = {});

// Same, but seeded with the panels [x_0, x_1], [x_1, x_2], ... so that kinks
// and oscillation scales can be resolved from the start.
Result<double> integrate_panels(const std::function<double(double)>& f,
                                std::span<const double> breakpoints, const Options& opts = {});
Result<Complex> integrate_panels(const std::function<Complex(double)>& f,
                                 std::span<const double> breakpoints, const Options& opts = {});

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss–Legendre rule on [-1, 1] (Newton iteration on P_n).
Rule gauss_legendre(int n);

}  // namespace qprobe::quad
