#include "qprobe/qfi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qprobe/quadrature.hpp"

namespace qprobe {

BlochState initial_state(double alpha) { return BlochState(Vec3(std::cos(alpha), 0.0, std::sin(alpha))); }

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    const double da = a.determinant();
    const double db = b.determinant();
    if (da < -1e-9 || db < -1e-9) throw std::invalid_argument("fidelity: negative determinant");
    const double overlap = (a.matrix() * b.matrix()).trace().real();
    const double f = overlap + 2.0 * std::sqrt(std::max(0.0, da) * std::max(0.0, db));
    return std::clamp(f, 0.0, 1.0);
}

double sqrt_infidelity(const Vec3& r1, const Vec3& r2) {
    // With r = (r1 + r2)/2, d = r2 - r1 and u = 1 - |r|^2 - |d|^2/4:
    //   1 - F = (|d|^2/2 + (r.d)^2 / (u + sqrt(u^2 - (r.d)^2))) / 2
    const Vec3 r = 0.5 * (r1 + r2);
    const Vec3 d = r2 - r1;
    const double p = r.dot(d);
    const double u = 1.0 - r.squaredNorm() - 0.25 * d.squaredNorm();
    const double root = std::sqrt(std::max(0.0, u * u - p * p));
    const double den = u + root;
    const double radial = (den > 0.0) ? p * p / den : 0.0;
    const double one_minus_f = 0.5 * (0.5 * d.squaredNorm() + radial);
    const double f = std::clamp(1.0 - one_minus_f, 0.0, 1.0);
    return one_minus_f / (1.0 + std::sqrt(f));
}

void QfiConfig::validate() const {
    if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("QFI: delta must be > 0");
}

double qfi_from_states(const Vec3& r_lo, const Vec3& r_hi, double delta) {
    const double q = 8.0 * sqrt_infidelity(r_lo, r_hi) / (delta * delta);
    if (q < kQfiClamp) throw std::invalid_argument("QFI: negative value beyond roundoff");
    return std::max(0.0, q);
}

double qfi_from_fidelity(const StateFamily& family, double eta, const QfiConfig& config) {
    config.validate();
    if (!(config.delta < std::abs(eta)) && eta != 0.0)
        throw std::invalid_argument("QFI: delta must be much smaller than eta");
    double lo = eta, hi = eta + config.delta;
    if (config.scheme == DifferenceScheme::Central) {
        lo = eta - 0.5 * config.delta;
        hi = eta + 0.5 * config.delta;
    }
    const FamilyPoint a = family(lo);
    const FamilyPoint b = family(hi);
    if ((a.initial - b.initial).norm() > 1e-12)
        throw std::invalid_argument("QFI: family members evolved from different initial states");
    const Vec4 ra = extended_bloch(a.state.matrix());
    const Vec4 rb = extended_bloch(b.state.matrix());
    return qfi_from_states(ra.tail<3>(), rb.tail<3>(), config.delta);
}

double qfi_bloch(const Vec4& x, const Vec4& dx) {
    const double den = 2.0 - x.squaredNorm();
    const double num = x.dot(dx);
    double q;
    if (std::abs(den) < 1e-12) {
        // Pure state: only a tangential derivative keeps the family inside the ball.
        const Vec3 r = x.tail<3>();
        const Vec3 dr = dx.tail<3>();
        const double radial = r.norm() > 0.0 ? r.normalized().dot(dr) : 0.0;
        if (std::abs(radial) > 1e-6 * std::max(1.0, dr.norm()))
            throw SingularConfiguration("QFI: pure state with non-vanishing radial derivative");
        q = dr.squaredNorm();
    } else {
        q = dx.squaredNorm() + num * num / den;
    }
    if (q < kQfiClamp) throw std::invalid_argument("QFI: negative value beyond roundoff");
    return std::max(0.0, q);
}

double qfi_bloch(const SuperOp& d, const Mat4& d_dot, const Vec4& r0) {
    return qfi_bloch(Vec4(d.matrix() * r0), Vec4(d_dot * r0));
}

double qfi_short_closed_form(EnvParameter eta, const BathParameters& bath, double t, double theta, double alpha) {
    const double z0 = spectral::moment(bath.sd, bath.beta(), 0);
    const double dz0 = spectral::moment_derivative(bath, 0, eta);
    const double s = std::sin(alpha - theta);
    return 0.25 * t * t * s * s * dz0 * dz0 / z0;
}

double ratio_R(double q_candidate, double q_reference) {
    if (!(q_reference > 0.0)) throw std::invalid_argument("ratio_R: reference QFI must be > 0");
    return (q_candidate - q_reference) / q_reference;
}

double decoherence_exponent(const BathParameters& bath, double t) {
    if (t < 0.0) throw std::invalid_argument("decoherence_exponent: t must be >= 0");
    if (t == 0.0) return 0.0;
    const auto& sd = bath.sd;
    const double beta = bath.beta();
    const double upper = spectral::frequency_horizon(sd, std::max(sd.ohmicity, 1.0));
    const double width = std::min(sd.cutoff, kPi / t);
    std::vector<double> pts;
    for (double w = 0.0; w < upper; w += width) pts.push_back(w);
    pts.push_back(upper);
    auto f = [&](double w) {
        const double h = std::sin(0.5 * w * t);
        const double coth = 1.0 + 2.0 / std::expm1(beta * w);
        return spectral::eval_J(sd, w) * coth * 2.0 * h * h / (w * w);
    };
    quad::Options opts;
    opts.abs_tol = 1e-13;
    opts.rel_tol = 1e-14;
    return quad::integrate_panels(std::function<double(double)>(f), pts, opts).value;
}

DensityMatrix dephasing_oracle(const BathParameters& bath, double omega_s, const DensityMatrix& rho0, double t) {
    if (t < 0.0) throw std::invalid_argument("dephasing_oracle: t must be >= 0");
    Mat2 m = rho0.matrix();
    const Complex factor = std::exp(Complex(-decoherence_exponent(bath, t), -omega_s * t));
    m(0, 1) *= factor;
    m(1, 0) = std::conj(m(0, 1));
    return DensityMatrix::unchecked(m);
}

}  // namespace qprobe
