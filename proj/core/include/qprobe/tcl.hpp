// tcl.hpp: second-order time-convolutionless (TCL2) master equation for the probe qubit.
//
//   d rho/dt = -i [H_S + H_LS(t), rho]
//              + sum_{k,j in {+,-,z}} b_kj(t) ( s_k rho s_j^dag - 1/2 { s_j^dag s_k, rho } )
//
// with H_S = omega_S sigma_z / 2, interaction A(theta) = (cos(theta) sigma_x + sin(theta) sigma_z)/2
// and all coefficients linear in Gamma(xi, t) = int_0^t e^{i xi tau} C(tau) d tau at xi in {0, +-omega_S}.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qprobe/bloch.hpp"
#include "qprobe/spectral.hpp"
#include "qprobe/types.hpp"

namespace qprobe {

struct ProbeConfig {
    double omega_s = 1.0;
    double theta = kPi / 2;  // interaction angle in [0, pi/2]

    static ProbeConfig make(double omega_s, double theta);
    void validate() const;

    Mat2 hamiltonian() const;   // omega_S sigma_z / 2
    Mat2 interaction() const;   // A(theta)
};

Mat2 interaction_operator(double theta);

// Gamma(0, t), Gamma(+omega_S, t), Gamma(-omega_S, t)
struct GammaTriplet {
    Complex zero;
    Complex plus;
    Complex minus;
};

struct TclCoefficients {
    Complex b_zz, b_pp, b_mm;
    Complex b_pm, b_mp;
    Complex b_zp, b_pz;
    Complex b_zm, b_mz;
    Complex h00, h01, h10, h11;

    // Throws std::logic_error if the Hermiticity relations are violated.
    void check_symmetries(double tol = 1e-12) const;
    // 3x3 matrix b_kj, index order (+, -, z).
    Eigen::Matrix3cd dissipator_block() const;
    Mat2 lamb_shift() const;
};

namespace tcl {

// Gamma(xi, t) by adaptive quadrature of e^{i xi tau} C(tau) over [0, t].
Complex gamma(const BathParameters& bath, double xi, double t);

// Caches Gamma(xi, .) at checkpoints so that repeated queries at increasing
// times only integrate the new sub-interval. Not thread-safe; one per integration.
class GammaCache {
public:
    explicit GammaCache(BathParameters bath);

    Complex operator()(double xi, double t);
    GammaTriplet triplet(double omega_s, double t);
    std::size_t checkpoint_count() const;

private:
    BathParameters bath_;
    std::map<double, std::map<double, Complex>> checkpoints_;
};

TclCoefficients coefficients(const ProbeConfig& probe, const GammaTriplet& gamma);
TclCoefficients coefficients(const ProbeConfig& probe, const BathParameters& bath, double t);

// Bloch-space matrix of -i[H, .] for H = omega_S sigma_z / 2.
Mat4 hamiltonian_matrix(double omega_s);
// Bloch-space matrix of the Lamb shift plus dissipator (no H_S).
Mat4 dissipator_matrix(const TclCoefficients& c);
// Full generator D^{L(t)}; first row is identically zero.
Mat4 generator_matrix(const TclCoefficients& c, const ProbeConfig& probe);

// Action of the generator on a 2x2 operator, written directly from the master equation.
Mat2 apply_generator(const TclCoefficients& c, const ProbeConfig& probe, const Mat2& rho);

}  // namespace tcl

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::vector<std::string> warnings;

    // Throws std::invalid_argument unless t is strictly greater than the last time.
    void push(double t, const DensityMatrix& rho);
    std::size_t size() const { return times.size(); }
};

struct TclOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double initial_step = 1e-3;
    double positivity_warning = 1e-6;
};

// Integrates the TCL2 equation for the Bloch vector and samples it at t_grid.
// Throws ConvergenceError on step-size failure.
Trajectory evolve_tcl(const ProbeConfig& probe, const BathParameters& bath, const DensityMatrix& rho0,
                      const std::vector<double>& t_grid, const TclOptions& opts = {});

// Integrates the full 4x4 dynamical map dD/dt = D^{L(t)} D, D(0) = 1.
std::vector<SuperOp> evolve_tcl_map(const ProbeConfig& probe, const BathParameters& bath,
                                    const std::vector<double>& t_grid, const TclOptions& opts = {});

}  // namespace qprobe
