// types.hpp: shared scalar/matrix aliases and error types for qprobe

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qprobe {

using Complex = std::complex<double>;

using Mat2 = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Raised when an iterative or adaptive numerical procedure fails to reach
// the requested accuracy. Carries the best error estimate that was achieved.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

// Raised by the Bloch-space QFI formula for a pure-state configuration whose
// radial term does not vanish.
class SingularConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qprobe
