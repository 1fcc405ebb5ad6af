#include "qprobe/bloch.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qprobe {

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }
Mat2 x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}
Mat2 y() {
    Mat2 m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}
Mat2 z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}
Mat2 plus() {
    Mat2 m;
    m << 0, 1, 0, 0;
    return m;
}
Mat2 minus() {
    Mat2 m;
    m << 0, 0, 1, 0;
    return m;
}
}  // namespace pauli

DensityMatrix DensityMatrix::checked(const Mat2& m) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kTraceTolerance)
        throw std::invalid_argument("density matrix: not Hermitian");
    if (std::abs(m.trace() - 1.0) > kTraceTolerance) throw std::invalid_argument("density matrix: trace != 1");
    // 2x2 Hermitian with unit trace: eigenvalues (1 +- sqrt(1 - 4 det))/2
    const double det = m.determinant().real();
    const double disc = std::max(0.0, 1.0 - 4.0 * det);
    const double lmin = 0.5 * (1.0 - std::sqrt(disc));
    if (lmin < -kPositivityTolerance) throw std::invalid_argument("density matrix: negative eigenvalue");
    return DensityMatrix(m);
}

BlochState::BlochState(const Vec3& r) : r_(r) {
    if (!(r.norm() <= 1.0 + kNormTolerance)) throw std::invalid_argument("Bloch vector outside the unit ball");
}

Vec4 extended_bloch(const Mat2& rho) {
    // <sigma_k, rho> = Tr(sigma_k rho)
    return {rho.trace().real(), 2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(),
            (rho(0, 0) - rho(1, 1)).real()};
}

Mat2 matrix_from_extended(const Vec4& r) {
    Mat2 m;
    m(0, 0) = 0.5 * (r(0) + r(3));
    m(1, 1) = 0.5 * (r(0) - r(3));
    m(0, 1) = Complex(0.5 * r(1), -0.5 * r(2));
    m(1, 0) = std::conj(m(0, 1));
    return m;
}

BlochState bloch_from_density(const DensityMatrix& rho) {
    const Mat2& m = rho.matrix();
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > DensityMatrix::kTraceTolerance)
        throw std::invalid_argument("bloch_from_density: not Hermitian");
    if (std::abs(m.trace() - 1.0) > DensityMatrix::kTraceTolerance)
        throw std::invalid_argument("bloch_from_density: trace != 1");
    const Vec4 e = extended_bloch(m);
    Vec3 r(e(1), e(2), e(3));
    // Positivity tolerance of the density matrix maps onto a slightly looser ball.
    const double n = r.norm();
    if (n > 1.0 && n <= 1.0 + 2.0 * DensityMatrix::kPositivityTolerance) r /= n;
    return BlochState(r);
}

DensityMatrix density_from_bloch(const BlochState& r) {
    const Vec3& v = r.vector();
    return DensityMatrix::unchecked(matrix_from_extended({1.0, v.x(), v.y(), v.z()}));
}

SuperOp::SuperOp(const Mat4& d) : d_(d) {
    if (std::abs(d(0, 0) - 1.0) > 1e-12 || d.block<1, 3>(0, 1).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("SuperOp: first row must be (1, 0, 0, 0)");
    d_.row(0) << 1.0, 0.0, 0.0, 0.0;
}

Vec4 SuperOp::apply(const Vec4& r_ext) const { return d_ * r_ext; }

Mat4 matrix_of(const std::function<Mat2(const Mat2&)>& map) {
    const std::array<Mat2, 4> basis = {pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
    Mat4 d;
    for (int b = 0; b < 4; ++b) {
        const Mat2 image = map(basis[b]);
        // <tau_a, M[tau_b]> with tau = sigma / sqrt(2): the factors combine to 1/2
        for (int a = 0; a < 4; ++a) d(a, b) = 0.5 * (basis[a].adjoint() * image).trace().real();
    }
    return d;
}

}  // namespace qprobe
