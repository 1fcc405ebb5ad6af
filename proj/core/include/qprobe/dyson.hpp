// dyson.hpp: polynomial-in-time generators and truncated Dyson expansions of
// the TCL2 dynamical map.
//
// Gamma(xi, t) is expanded through the moments zeta(n):
//
//   Gamma(xi, t) = sum_j gamma_j(xi) t^j,
//   gamma_j(xi)  = i^{j-1}/j! sum_{n<j} binom(j-1, n) zeta(n) xi^{j-1-n},
//
// and since every TCL coefficient is linear in Gamma the generator matrix is a
// polynomial G(t) = sum_j G_j t^j. The map D(t) = sum_j M_j t^j then follows
// from dD/dt = G D, i.e. (j+1) M_{j+1} = sum_{i<=j} G_i M_{j-i}, M_0 = 1.

#pragma once

#include <string>
#include <vector>

#include "qprobe/bloch.hpp"
#include "qprobe/spectral.hpp"
#include "qprobe/tcl.hpp"

namespace qprobe {

// Polynomial with 4x4 real matrix coefficients, P(t) = sum_j coeffs[j] t^j.
struct MatrixPoly {
    std::vector<Mat4> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Mat4 operator()(double t) const;  // Horner
    Mat4 derivative(double t) const;  // dP/dt
};

// Dyson truncation D_(k)(t); M_0 is the identity.
class TimePolySuperOp {
public:
    TimePolySuperOp() : poly_{{Mat4::Identity()}} {}
    // Throws std::invalid_argument unless coeffs[0] is the identity and every
    // coefficient has a zero first row beyond the leading 1.
    explicit TimePolySuperOp(std::vector<Mat4> coeffs);

    int order() const { return poly_.degree(); }
    const std::vector<Mat4>& coefficients() const { return poly_.coeffs; }
    const MatrixPoly& polynomial() const { return poly_; }

private:
    MatrixPoly poly_;
};

SuperOp eval_poly(const TimePolySuperOp& p, double t);

namespace dyson {

inline constexpr int kMaxOrder = 7;

// Taylor coefficients gamma_j(xi), j = 0..degree (gamma_0 = 0).
std::vector<Complex> gamma_taylor(const std::array<double, spectral::kMaxMomentOrder + 1>& zeta, double xi,
                                  int degree);

// Generator D^{L(t)} truncated at degree k: G_0 is the free rotation, G_j for
// j >= 1 the dissipator built from gamma_j. Requires 1 <= k <= 7.
MatrixPoly generator_taylor(const ProbeConfig& probe, const spectral::MomentSet& m, int k);
MatrixPoly generator_taylor(const ProbeConfig& probe, const BathParameters& bath, int k);

// Derivative of the generator coefficients with respect to one environment
// parameter, from the moment derivatives in m.
MatrixPoly generator_taylor_derivative(const ProbeConfig& probe, const spectral::MomentSet& m, int k);

// D_(k), requires 2 <= k <= 7.
TimePolySuperOp dyson_truncated(const ProbeConfig& probe, const BathParameters& bath, int k);
TimePolySuperOp dyson_from_generator(const MatrixPoly& generator, int k);

// D_(k) together with its exact parameter derivative dD_(k)/d eta.
struct DysonDerivative {
    TimePolySuperOp map;
    MatrixPoly derivative;
};
DysonDerivative dyson_with_derivative(const ProbeConfig& probe, const BathParameters& bath, int k,
                                      EnvParameter eta);

// {"order": k, "coefficients": [[16 row-major entries], ...], ...} for symbolic
// cross-checks.
std::string to_json(const MatrixPoly& p, const std::string& label);

}  // namespace dyson
}  // namespace qprobe
