#include "qprobe/dyson.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qprobe {

Mat4 MatrixPoly::operator()(double t) const {
    Mat4 acc = Mat4::Zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Mat4 MatrixPoly::derivative(double t) const {
    Mat4 acc = Mat4::Zero();
    for (int j = degree(); j >= 1; --j) acc = acc * t + static_cast<double>(j) * coeffs[j];
    return acc;
}

TimePolySuperOp::TimePolySuperOp(std::vector<Mat4> coeffs) : poly_{std::move(coeffs)} {
    if (poly_.coeffs.empty() || !poly_.coeffs[0].isIdentity(0.0))
        throw std::invalid_argument("TimePolySuperOp: M_0 must be the identity");
    for (std::size_t j = 1; j < poly_.coeffs.size(); ++j) {
        if (poly_.coeffs[j].row(0).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("TimePolySuperOp: coefficients must keep the first row fixed");
        poly_.coeffs[j].row(0).setZero();
    }
}

SuperOp eval_poly(const TimePolySuperOp& p, double t) { return SuperOp(p.polynomial()(t)); }

namespace dyson {

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Complex ipow_i(int p) {
    switch (((p % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void check_order(int k, int lo) {
    if (k < lo || k > kMaxOrder)
        throw std::invalid_argument("Dyson order must lie in [" + std::to_string(lo) + ", " +
                                    std::to_string(kMaxOrder) + "]");
}

MatrixPoly dissipator_poly(const ProbeConfig& probe, const std::array<double, spectral::kMaxMomentOrder + 1>& z,
                           int k) {
    const auto g0 = gamma_taylor(z, 0.0, k);
    const auto gp = gamma_taylor(z, probe.omega_s, k);
    const auto gm = gamma_taylor(z, -probe.omega_s, k);
    MatrixPoly p;
    p.coeffs.assign(k + 1, Mat4::Zero());
    for (int j = 1; j <= k; ++j)
        p.coeffs[j] = tcl::dissipator_matrix(tcl::coefficients(probe, GammaTriplet{g0[j], gp[j], gm[j]}));
    return p;
}

}  // namespace

std::vector<Complex> gamma_taylor(const std::array<double, spectral::kMaxMomentOrder + 1>& zeta, double xi,
                                  int degree) {
    if (degree > spectral::kMaxMomentOrder + 1) throw std::invalid_argument("gamma_taylor: degree too large");
    std::vector<Complex> g(degree + 1, Complex{0.0, 0.0});
    double factorial = 1.0;
    for (int j = 1; j <= degree; ++j) {
        factorial *= j;
        double sum = 0.0;
        for (int n = 0; n < j; ++n) sum += binomial(j - 1, n) * zeta[n] * std::pow(xi, j - 1 - n);
        g[j] = ipow_i(j - 1) * (sum / factorial);
    }
    return g;
}

MatrixPoly generator_taylor(const ProbeConfig& probe, const spectral::MomentSet& m, int k) {
    check_order(k, 1);
    if (m.max_order < k - 1) throw std::invalid_argument("generator_taylor: moments up to zeta(k-1) required");
    MatrixPoly p = dissipator_poly(probe, m.value, k);
    p.coeffs[0] = tcl::hamiltonian_matrix(probe.omega_s);
    return p;
}

MatrixPoly generator_taylor(const ProbeConfig& probe, const BathParameters& bath, int k) {
    check_order(k, 1);
    return generator_taylor(probe, spectral::moments(bath, k - 1), k);
}

MatrixPoly generator_taylor_derivative(const ProbeConfig& probe, const spectral::MomentSet& m, int k) {
    check_order(k, 1);
    if (m.max_order < k - 1) throw std::invalid_argument("generator_taylor: moments up to zeta(k-1) required");
    return dissipator_poly(probe, m.derivative, k);
}

TimePolySuperOp dyson_from_generator(const MatrixPoly& g, int k) {
    std::vector<Mat4> m(k + 1, Mat4::Zero());
    m[0] = Mat4::Identity();
    for (int j = 0; j < k; ++j) {
        Mat4 acc = Mat4::Zero();
        for (int i = 0; i <= j && i <= g.degree(); ++i) acc += g.coeffs[i] * m[j - i];
        m[j + 1] = acc / static_cast<double>(j + 1);
    }
    return TimePolySuperOp(std::move(m));
}

TimePolySuperOp dyson_truncated(const ProbeConfig& probe, const BathParameters& bath, int k) {
    check_order(k, 2);
    // D_(k) needs G_0 .. G_{k-1}, i.e. moments through zeta(k-2).
    return dyson_from_generator(generator_taylor(probe, spectral::moments(bath, k - 2), k - 1), k);
}

DysonDerivative dyson_with_derivative(const ProbeConfig& probe, const BathParameters& bath, int k,
                                      EnvParameter eta) {
    check_order(k, 2);
    const auto mom = spectral::moments(bath, k - 2, eta);
    const MatrixPoly g = generator_taylor(probe, mom, k - 1);
    const MatrixPoly dg = generator_taylor_derivative(probe, mom, k - 1);
    TimePolySuperOp map = dyson_from_generator(g, k);
    const auto& m = map.coefficients();

    MatrixPoly dm;
    dm.coeffs.assign(k + 1, Mat4::Zero());
    for (int j = 0; j < k; ++j) {
        Mat4 acc = Mat4::Zero();
        for (int i = 0; i <= j && i <= g.degree(); ++i) acc += dg.coeffs[i] * m[j - i] + g.coeffs[i] * dm.coeffs[j - i];
        dm.coeffs[j + 1] = acc / static_cast<double>(j + 1);
    }
    return {std::move(map), std::move(dm)};
}

std::string to_json(const MatrixPoly& p, const std::string& label) {
    nlohmann::json j;
    j["label"] = label;
    j["degree"] = p.degree();
    j["basis"] = {"1", "sigma_x", "sigma_y", "sigma_z"};
    auto& list = j["coefficients"] = nlohmann::json::array();
    for (const Mat4& c : p.coeffs) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < 4; ++r) rows.push_back({c(r, 0), c(r, 1), c(r, 2), c(r, 3)});
        list.push_back(rows);
    }
    return j.dump(2);
}

}  // namespace dyson
}  // namespace qprobe
