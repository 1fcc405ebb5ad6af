// bloch.hpp: qubit density matrices, Bloch vectors and 4x4 affine maps.
//
// Operators are expanded in {1, sigma_x, sigma_y, sigma_z}/sqrt(2); a state is
// the extended vector (1, r_x, r_y, r_z) and a trace-preserving map is
//
//     | 1   0 |
//     | nu  V |      acting as  (1, r) -> (1, nu + V r).

#pragma once

#include <functional>

#include "qprobe/types.hpp"

namespace qprobe {

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 plus();   // sigma_+ = |0><1|
Mat2 minus();  // sigma_- = |1><0|
}  // namespace pauli

// 2x2 Hermitian, unit-trace matrix. Positivity is checked to 1e-9.
class DensityMatrix {
public:
    static constexpr double kTraceTolerance = 1e-10;
    static constexpr double kPositivityTolerance = 1e-9;

    DensityMatrix() : m_(Mat2::Identity() * 0.5) {}
    // Throws std::invalid_argument for non-Hermitian, non-unit-trace or
    // negative input.
    static DensityMatrix checked(const Mat2& m);
    // No validation; used for truncated expansions that may leave the ball.
    static DensityMatrix unchecked(const Mat2& m) { return DensityMatrix(m); }

    const Mat2& matrix() const noexcept { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }
    double determinant() const { return m_.determinant().real(); }

private:
    explicit DensityMatrix(const Mat2& m) : m_(m) {}
    Mat2 m_;
};

class BlochState {
public:
    static constexpr double kNormTolerance = 1e-9;

    BlochState() = default;
    // Throws std::invalid_argument if |r| > 1 + 1e-9.
    explicit BlochState(const Vec3& r);

    const Vec3& vector() const noexcept { return r_; }
    Vec4 extended() const { return {1.0, r_.x(), r_.y(), r_.z()}; }

private:
    Vec3 r_ = Vec3::Zero();
};

BlochState bloch_from_density(const DensityMatrix& rho);
DensityMatrix density_from_bloch(const BlochState& r);

// Extended vector (1, r) of a possibly unphysical Hermitian unit-trace matrix.
Vec4 extended_bloch(const Mat2& rho);
Mat2 matrix_from_extended(const Vec4& r);

// Trace-preserving affine map: first row exactly (1, 0, 0, 0).
class SuperOp {
public:
    SuperOp() : d_(Mat4::Identity()) {}
    // Throws std::invalid_argument if the first row differs from (1,0,0,0) by more than 1e-12.
    explicit SuperOp(const Mat4& d);

    const Mat4& matrix() const noexcept { return d_; }
    Vec3 translation() const { return d_.block<3, 1>(1, 0); }
    Mat3 linear() const { return d_.block<3, 3>(1, 1); }

    Vec4 apply(const Vec4& r_ext) const;

private:
    Mat4 d_;
};

// D_{ab} = <tau_a, M[tau_b]> for a linear map M on 2x2 matrices. Hermiticity-
// preserving maps give a real matrix; the imaginary residue is dropped.
Mat4 matrix_of(const std::function<Mat2(const Mat2&)>& map);

}  // namespace qprobe
