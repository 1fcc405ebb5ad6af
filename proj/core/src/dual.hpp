// dual.hpp: forward-mode dual numbers for first derivatives of closed forms

#pragma once

#include <cmath>

namespace qprobe::detail {

struct Dual {
    double v = 0.0;  // value
    double d = 0.0;  // derivative

    Dual() = default;
    constexpr Dual(double value, double deriv = 0.0) : v(value), d(deriv) {}

    static constexpr Dual variable(double value) { return {value, 1.0}; }
};

inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(Dual a) { return {-a.v, -a.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }

inline Dual pow(Dual a, int k) {
    if (k == 0) return {1.0, 0.0};
    const double pk1 = std::pow(a.v, k - 1);
    return {pk1 * a.v, k * pk1 * a.d};
}

inline double value_of(double x) { return x; }
inline double value_of(Dual x) { return x.v; }
inline double deriv_of(double) { return 0.0; }
inline double deriv_of(Dual x) { return x.d; }

}  // namespace qprobe::detail
