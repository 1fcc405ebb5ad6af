#include "qprobe/polygamma.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qprobe {

namespace {

constexpr double kShiftThreshold = 15.0;
constexpr int kAsymptoticTerms = 20;

// B_2, B_4, ..., B_40
constexpr std::array<double, kAsymptoticTerms> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
};

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

bool is_pole(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

Complex asymptotic(int m, Complex z) {
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    if (m == 0) {
        Complex sum = std::log(z) - 0.5 * inv;
        Complex power = inv2;
        for (int k = 1; k <= kAsymptoticTerms; ++k) {
            sum -= kBernoulliEven[k - 1] / (2.0 * k) * power;
            power *= inv2;
        }
        return sum;
    }
    // (-1)^(m+1) [ (m-1)!/z^m + m!/(2 z^(m+1)) + sum_k B_2k (2k+m-1)!/(2k)! / z^(2k+m) ]
    const Complex inv_m = std::pow(inv, m);
    Complex sum = factorial(m - 1) * inv_m + 0.5 * factorial(m) * inv_m * inv;
    Complex power = inv_m * inv2;
    // ratio (2k+m-1)!/(2k)! built incrementally
    double ratio = factorial(m + 1) / 2.0;
    for (int k = 1; k <= kAsymptoticTerms; ++k) {
        sum += kBernoulliEven[k - 1] * ratio * power;
        power *= inv2;
        const double a = 2.0 * k;
        ratio *= (a + m) * (a + m + 1.0) / ((a + 1.0) * (a + 2.0));
    }
    return (m % 2 == 0) ? -sum : sum;
}

}  // namespace

Complex polygamma(int order, Complex z) {
    if (order < 0) throw std::invalid_argument("polygamma: order must be non-negative");
    if (is_pole(z)) throw std::domain_error("polygamma: pole at non-positive integer argument");

    // psi^(m)(z) = psi^(m)(z + N) - (-1)^m m! sum_{k<N} (z+k)^-(m+1)
    Complex shift_sum{0.0, 0.0};
    while (std::abs(z) < kShiftThreshold || z.real() < 1.0) {
        shift_sum += std::pow(1.0 / z, order + 1);
        z += 1.0;
    }
    const double sign = (order % 2 == 0) ? 1.0 : -1.0;
    return asymptotic(order, z) - sign * factorial(order) * shift_sum;
}

double polygamma(int order, double x) {
    return polygamma(order, Complex{x, 0.0}).real();
}

double hurwitz_zeta(int s, double a) {
    if (s < 2) throw std::invalid_argument("hurwitz_zeta: order must be >= 2");
    if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: a must be positive");
    // psi^(s-1)(a) = (-1)^s (s-1)! zeta(s, a)
    const double sign = (s % 2 == 0) ? 1.0 : -1.0;
    return sign * polygamma(s - 1, a) / factorial(s - 1);
}

}  // namespace qprobe
