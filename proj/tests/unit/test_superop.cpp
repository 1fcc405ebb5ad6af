#include <array>
#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "qprobe/bloch.hpp"
#include "qprobe/dyson.hpp"
#include "qprobe/qfi.hpp"
#include "qprobe/tcl.hpp"
#include "../support/support.hpp"

using namespace qprobe;
using qprobe::test::bath_beta;
using qprobe::test::bath_T;
using qprobe::test::rel_diff;

namespace {

// Classical RK4 for dD/dt = G(t) D with a polynomial generator; an independent
// route to the time-ordered exponential.
Mat4 ordered_exponential(const MatrixPoly& g, double t, int steps) {
    Mat4 d = Mat4::Identity();
    const double h = t / steps;
    for (int i = 0; i < steps; ++i) {
        const double s = i * h;
        const Mat4 k1 = g(s) * d;
        const Mat4 k2 = g(s + h / 2) * (d + h / 2 * k1);
        const Mat4 k3 = g(s + h / 2) * (d + h / 2 * k2);
        const Mat4 k4 = g(s + h) * (d + h * k3);
        d += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return d;
}

Vec4 ext(const Vec3& r) { return {1.0, r.x(), r.y(), r.z()}; }

}  // namespace

TEST_SUITE("superop") {

TEST_CASE("Bloch vector of simple states") {
    CHECK(bloch_from_density(DensityMatrix()).vector().norm() < 1e-16);
    Mat2 plus;
    plus << 0.5, 0.5, 0.5, 0.5;
    CHECK((bloch_from_density(DensityMatrix::checked(plus)).vector() - Vec3(1, 0, 0)).norm() < 1e-15);
    Mat2 zero;
    zero << 1, 0, 0, 0;
    CHECK((bloch_from_density(DensityMatrix::checked(zero)).vector() - Vec3(0, 0, 1)).norm() < 1e-15);
}

TEST_CASE("density and Bloch forms are mutually inverse") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        Vec3 r(u(rng), u(rng), u(rng));
        if (r.norm() > 1.0) r /= r.norm() * 1.0001;
        const auto rho = density_from_bloch(BlochState(r));
        CHECK((bloch_from_density(rho).vector() - r).norm() < 1e-14);
        const auto back = density_from_bloch(bloch_from_density(rho));
        CHECK((back.matrix() - rho.matrix()).norm() < 1e-14);
    }
}

TEST_CASE("density matrix validation") {
    Mat2 m;
    m << 0.5, 0.2, 0.1, 0.5;
    CHECK_THROWS_AS(DensityMatrix::checked(m), std::invalid_argument);
    m << 0.6, 0, 0, 0.5;
    CHECK_THROWS_AS(DensityMatrix::checked(m), std::invalid_argument);
    m << 1.1, 0, 0, -0.1;
    CHECK_THROWS_AS(DensityMatrix::checked(m), std::invalid_argument);
    CHECK_THROWS_AS(BlochState(Vec3(1, 1, 0)), std::invalid_argument);
}

TEST_CASE("affine maps keep the first row") {
    Mat4 bad = Mat4::Identity();
    bad(0, 2) = 1e-6;
    CHECK_THROWS_AS(SuperOp{bad}, std::invalid_argument);
    const SuperOp id;
    const Vec4 r(1, 0.2, -0.3, 0.4);
    CHECK((id.apply(r) - r).norm() == 0.0);
    CHECK((matrix_of([](const Mat2& x) { return x; }) - Mat4::Identity()).norm() < 1e-15);
    // Unitary rotation about z by pi/2 maps x to y.
    Mat2 u = Mat2::Zero();
    u(0, 0) = std::exp(Complex(0, -kPi / 4));
    u(1, 1) = std::exp(Complex(0, kPi / 4));
    const Mat4 rot = matrix_of([&](const Mat2& x) -> Mat2 { return u * x * u.adjoint(); });
    CHECK((SuperOp(rot).apply(Vec4(1, 1, 0, 0)) - Vec4(1, 0, 1, 0)).norm() < 1e-15);
}

TEST_CASE("polynomial maps start at the identity") {
    std::vector<Mat4> c(3, Mat4::Zero());
    CHECK_THROWS_AS(TimePolySuperOp{c}, std::invalid_argument);
    c[0] = Mat4::Identity();
    c[1](0, 1) = 0.5;
    CHECK_THROWS_AS(TimePolySuperOp{c}, std::invalid_argument);
    for (int k = 2; k <= 7; ++k) {
        const auto d = dyson::dyson_truncated(ProbeConfig::make(0.1, 0.5), bath_T(1, 1, 0.07), k);
        CHECK(d.order() == k);
        CHECK((eval_poly(d, 0.0).matrix() - Mat4::Identity()).norm() == 0.0);
    }
}

TEST_CASE("Gamma Taylor coefficients reproduce the quadrature") {
    const auto bath = bath_T(1, 1, 0.1);
    const auto m = spectral::moments(bath, 7);
    for (double xi : {-5.0, 0.0, 2.0}) {
        const auto g = dyson::gamma_taylor(m.value, xi, 8);
        const double t = 0.02;  // the first omitted term is ~1e-14 here
        Complex series = 0.0;
        for (int j = 8; j >= 1; --j) series = (series + g[j]) * t;
        CHECK(std::abs(series - tcl::gamma(bath, xi, t)) < 1e-12);
    }
}

TEST_CASE("second-order map entries") {
    const auto bath = bath_T(1, 1, 0.07);
    const double z0 = spectral::moment(bath.sd, bath.beta(), 0);
    for (double th : {0.0, 0.4, kPi / 2}) {
        const double w = 0.1, t = 0.35;
        const Mat4 d = eval_poly(dyson::dyson_truncated(ProbeConfig::make(w, th), bath, 2), t).matrix();
        const double s = std::sin(th);
        CHECK(d(1, 1) == doctest::Approx(1 - t * t / 2 * (z0 * s * s + w * w)).epsilon(1e-13));
        CHECK(d(1, 3) == doctest::Approx(t * t / 4 * z0 * std::sin(2 * th)).epsilon(1e-13));
    }
    // Direct matrix-vector product with the hand-built D_(2) column for x.
    const double w = 0.1, t = 0.35;
    const Mat4 d = eval_poly(dyson::dyson_truncated(ProbeConfig::make(w, kPi / 2), bath, 2), t).matrix();
    const Vec4 out = SuperOp(d).apply(Vec4(1, 1, 0, 0));
    CHECK(out(0) == 1.0);
    CHECK(out(1) == doctest::Approx(1 - t * t / 2 * (z0 + w * w)).epsilon(1e-13));
    CHECK(out(2) == doctest::Approx(w * t).epsilon(1e-12));
}

TEST_CASE("telescoping consistency of truncation orders") {
    const auto bath = bath_beta(1, 1, 14.3);
    for (double th : {0.0, 0.8, kPi / 2}) {
        const auto p = ProbeConfig::make(1.0, th);
        for (int k = 3; k <= 7; ++k) {
            const auto hi = dyson::dyson_truncated(p, bath, k).coefficients();
            const auto lo = dyson::dyson_truncated(p, bath, k - 1).coefficients();
            for (int j = 0; j < k; ++j) CHECK((hi[j] - lo[j]).norm() < 1e-12 * (1 + lo[j].norm()));
        }
    }
}

TEST_CASE("translations start at fourth order and vanish for pure dephasing") {
    const auto bath = bath_T(1, 1, 0.07);
    for (double th : {0.0, 0.3, kPi / 4, 1.2}) {
        const auto c = dyson::dyson_truncated(ProbeConfig::make(1.0, th), bath, 7).coefficients();
        for (int j = 0; j <= 3; ++j) CHECK(c[j].block<3, 1>(1, 0).norm() < 1e-14);
        if (th != 0.0 && th != kPi / 2) CHECK(c[4].block<3, 1>(1, 0).norm() > 1e-6);
    }
    const auto p = ProbeConfig::make(1.0, kPi / 2);
    for (int k = 2; k <= 7; ++k) {
        const auto d = dyson::dyson_truncated(p, bath, k);
        for (double t : {0.1, 0.35, 0.8})
            CHECK((eval_poly(d, t).apply(Vec4(1, 0, 0, 0)) - Vec4(1, 0, 0, 0)).norm() < 1e-14);
    }
}

TEST_CASE("truncated map equals the ordered exponential of its generator to truncation order") {
    const auto bath = bath_T(1, 1, 0.1);
    const auto p = ProbeConfig::make(5.0, 0.6);
    const auto g = dyson::generator_taylor(p, bath, 6);
    const auto d7 = dyson::dyson_from_generator(g, 7);
    for (double t : {0.02, 0.04}) {
        const Mat4 exact = ordered_exponential(g, t, 2000);
        // Remainder is O(t^8) with coefficients of size ~ (|G| t)^8 / 8!.
        CHECK((eval_poly(d7, t).matrix() - exact).norm() < 1e-9);
    }
}

TEST_CASE("Taylor generator approaches the exact generator as t^4") {
    const auto bath = bath_beta(1, 1, 14.3);
    const auto p = ProbeConfig::make(1.0, kPi / 4);
    const auto g3 = dyson::generator_taylor(p, bath, 3);
    auto residual = [&](double t) {
        return (tcl::generator_matrix(tcl::coefficients(p, bath, t), p) - g3(t)).norm();
    };
    const double r1 = residual(0.04), r2 = residual(0.02);
    CHECK(r1 / r2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("third-order generator: linear block entries shared with the closed forms") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> th_d(0.0, kPi / 2), w_d(0.05, 5.0), b_d(0.5, 50.0);
    for (int draw = 0; draw < 3; ++draw) {
        const double th = th_d(rng), w = w_d(rng), beta = b_d(rng);
        const auto bath = bath_beta(1, 1, beta);
        const auto m = spectral::moments(bath, 2);
        const double z0 = m.value[0], z1 = m.value[1], z2 = m.value[2];
        const double s = std::sin(th), c = std::cos(th);
        const auto g = dyson::generator_taylor(ProbeConfig::make(w, th), m, 3);
        const double t = 0.3;
        const Mat4 d = g(t);
        CAPTURE(th);
        CAPTURE(w);
        CAPTURE(beta);
        CHECK(d(1, 1) == doctest::Approx(z2 * t * t * t * s * s / 6 - z0 * t * s * s).epsilon(1e-10));
        CHECK(d(1, 2) == doctest::Approx(-w).epsilon(1e-10));
        CHECK(d(2, 1) == doctest::Approx(0.5 * t * t * w * z0 * c * c + w).epsilon(1e-10));
        CHECK(d(2, 2) == doctest::Approx(t * t * t / 6 * (z0 * w * w * c * c + z2) - z0 * t).epsilon(1e-10));
        CHECK(d(3, 3) ==
              doctest::Approx(t * t * t / 6 * (z0 * w * w + z2) * c * c - z0 * t * c * c).epsilon(1e-10));
        (void)z1;
    }
}

TEST_CASE("third-order translation drives the probe towards its ground state") {
    // With H_S = omega_S sigma_z / 2 the ground state has r_z = -1, so at zero
    // temperature the translation generator must point to negative r_z:
    // mu_(3) = -(t^3 zeta(1) omega_S / 6)(sin 2 theta, 0, -2 cos^2 theta).
    const auto bath = bath_beta(1, 1, 1e3);
    const auto g = dyson::generator_taylor(ProbeConfig::make(1.0, 0.0), bath, 3);
    const Vec3 mu = g.coeffs[3].block<3, 1>(1, 0);
    CHECK((mu - Vec3(0, 0, -2.0 / 3.0)).norm() < 1e-12);
    const double th = 0.5, w = 2.0;
    const auto g2 = dyson::generator_taylor(ProbeConfig::make(w, th), bath, 3);
    const Vec3 mu2 = g2.coeffs[3].block<3, 1>(1, 0);
    const double z1 = -2.0;
    CHECK((mu2 + z1 * w / 6 * Vec3(std::sin(2 * th), 0, -2 * std::cos(th) * std::cos(th))).norm() < 1e-12);
    CHECK(dyson::generator_taylor(ProbeConfig::make(w, kPi / 2), bath, 3).coeffs[3].block<3, 1>(1, 0).norm() <
          1e-15);
    // Consistent with the exact generator: relaxation at zero temperature lowers r_z.
    const auto traj = evolve_tcl(ProbeConfig::make(1.0, 0.0), bath, density_from_bloch(BlochState(Vec3(0, 0, 1))),
                                 {20.0});
    CHECK(bloch_from_density(traj.states.back()).vector().z() < 0.9);
}

TEST_CASE("analytic parameter derivative of the Dyson map") {
    const auto bath = bath_T(1, 1, 0.07);
    const auto p = ProbeConfig::make(0.1, 0.7);
    for (auto eta : {EnvParameter::InverseTemperature, EnvParameter::Cutoff, EnvParameter::Coupling}) {
        const auto dd = dyson::dyson_with_derivative(p, bath, 7, eta);
        const double h = 1e-4 * bath.value(eta);
        const double t = 0.35;
        const Mat4 fd = (eval_poly(dyson::dyson_truncated(p, bath.shifted(eta, h), 7), t).matrix() -
                         eval_poly(dyson::dyson_truncated(p, bath.shifted(eta, -h), 7), t).matrix()) /
                        (2 * h);
        CAPTURE(to_string(eta));
        CHECK((dd.derivative(t) - fd).norm() < 1e-6 * (1 + fd.norm()));
        CHECK((dd.map.polynomial()(t) - eval_poly(dyson::dyson_truncated(p, bath, 7), t).matrix()).norm() < 1e-15);
        CHECK(dd.derivative(0.0).norm() == 0.0);
    }
}

TEST_CASE("Dyson action tracks the TCL solution and improves with order") {
    // Low truncation orders may leave the Bloch ball, so compare Bloch vectors directly.
    const auto bath = bath_T(1, 1, 0.1);
    const Vec3 r0(1, 0, 0);
    for (double th : {0.0, kPi / 4}) {
        const auto p = ProbeConfig::make(1.0, th);
        const std::vector<double> grid{0.1, 0.2, 0.3, 0.4};
        const auto traj = evolve_tcl(p, bath, density_from_bloch(BlochState(r0)), grid);
        double previous = 1.0;
        for (int k = 2; k <= 7; ++k) {
            const Vec4 r = eval_poly(dyson::dyson_truncated(p, bath, k), 0.3).apply(ext(r0));
            const double err = (r.tail<3>() - bloch_from_density(traj.states[2]).vector()).norm();
            CAPTURE(th);
            CAPTURE(k);
            CHECK(err < previous);
            previous = err;
        }
        const auto d7 = dyson::dyson_truncated(p, bath, 7);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Vec4 r = eval_poly(d7, grid[i]).apply(ext(r0));
            CHECK((r.tail<3>() - bloch_from_density(traj.states[i]).vector()).norm() < 3e-4);
        }
    }
}

TEST_CASE("generator coefficients export as JSON") {
    const auto g = dyson::generator_taylor(ProbeConfig::make(1.0, 0.3), bath_T(1, 1, 0.07), 3);
    const auto j = nlohmann::json::parse(dyson::to_json(g, "L3"));
    CHECK(j["label"] == "L3");
    CHECK(j["degree"] == 3);
    for (int d = 0; d <= 3; ++d)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(j["coefficients"][d][r][c].get<double>() == g.coeffs[d](r, c));
}

TEST_CASE("order bounds") {
    const auto bath = bath_T(1, 1, 0.07);
    CHECK_THROWS_AS(dyson::dyson_truncated(ProbeConfig::make(1, 0.3), bath, 1), std::invalid_argument);
    CHECK_THROWS_AS(dyson::dyson_truncated(ProbeConfig::make(1, 0.3), bath, 8), std::invalid_argument);
    CHECK_THROWS_AS(dyson::generator_taylor(ProbeConfig::make(1, 0.3), spectral::moments(bath, 1), 4),
                    std::invalid_argument);
}

}  // TEST_SUITE
