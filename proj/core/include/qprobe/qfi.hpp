// qfi.hpp: quantum Fisher information of a qubit probe.
//
// Two independent routes:
//   fidelity limit   Q = 8 (1 - sqrt F(rho_eta, rho_{eta+d})) / d^2
//   Bloch map form   Q = |dD r0|^2 + (D r0 . dD r0)^2 / (2 - |D r0|^2)
// with extended vectors r0 = (1, r) in the second formula.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qprobe/bloch.hpp"
#include "qprobe/spectral.hpp"
#include "qprobe/types.hpp"

namespace qprobe {

// (cos alpha, 0, sin alpha)
BlochState initial_state(double alpha);

// Uhlmann fidelity of two qubit states, Tr(r1 r2) + 2 sqrt(det r1 det r2).
// Throws std::invalid_argument if a determinant is below -1e-9.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

// 1 - sqrt(F) from the Bloch vectors, free of the cancellation in 1 - F for
// nearby states. Unphysical inputs (|r| slightly above 1) are clamped.
double sqrt_infidelity(const Vec3& r1, const Vec3& r2);

enum class DifferenceScheme { Forward, Central };

struct QfiConfig {
    double delta = 1e-4;
    DifferenceScheme scheme = DifferenceScheme::Central;
    EnvParameter eta = EnvParameter::InverseTemperature;

    void validate() const;
};

// Evolved state of a parameter family together with the initial Bloch vector
// it was propagated from.
struct FamilyPoint {
    DensityMatrix state;
    Vec3 initial = Vec3::Zero();
};
using StateFamily = std::function<FamilyPoint(double eta)>;

inline constexpr double kQfiClamp = -1e-6;

// Throws std::invalid_argument if the two evaluations start from different
// initial states, or if Q < -1e-6.
double qfi_from_fidelity(const StateFamily& family, double eta, const QfiConfig& config);

// Fidelity route on two already evolved states separated by delta.
double qfi_from_states(const Vec3& r_lo, const Vec3& r_hi, double delta);

// Throws SingularConfiguration for a pure state whose radial derivative does not vanish.
double qfi_bloch(const SuperOp& d, const Mat4& d_dot, const Vec4& r0_ext);
double qfi_bloch(const Vec4& r_ext, const Vec4& dr_ext);

// (t^2/4) sin^2(alpha - theta) (d zeta(0)/d eta)^2 / zeta(0)
double qfi_short_closed_form(EnvParameter eta, const BathParameters& bath, double t, double theta, double alpha);

// (Q - Q_ref)/Q_ref; throws std::invalid_argument unless Q_ref > 0.
double ratio_R(double q_candidate, double q_reference);

// Gamma_d(t) = int_0^inf J(w) coth(beta w/2) (1 - cos wt)/w^2 dw.
double decoherence_exponent(const BathParameters& bath, double t);

// Exact pure-dephasing (theta = pi/2) state at time t.
DensityMatrix dephasing_oracle(const BathParameters& bath, double omega_s, const DensityMatrix& rho0, double t);

}  // namespace qprobe
