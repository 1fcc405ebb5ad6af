// spectral.hpp: Ohmic spectral density, thermal occupations, correlation
// function C(t) and its moments zeta(n).
//
// Units: frequencies and times are dimensionless in units of the cutoff
// convention used throughout (omega_c = 1 unless a parameter sweep perturbs it).
// The correlation function follows
//
//   C(t) = int_0^inf dw J(w) [ (1 + n(w)) e^{-iwt} + n(w) e^{iwt} ],
//
// so that zeta(n) = i^{-n} d^n C/dt^n |_{t=0} and zeta(1) = -int w J(w) dw.

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "qprobe/types.hpp"

namespace qprobe {

struct OhmicSpectralDensity {
    double coupling = 1.0;  // lambda
    double ohmicity = 1.0;  // s
    double cutoff = 1.0;    // omega_c

    // Validating constructor; throws std::invalid_argument unless all fields > 0.
    static OhmicSpectralDensity make(double coupling, double ohmicity, double cutoff = 1.0);

    void validate() const;
    // True when s is an integer, which enables the polygamma closed forms.
    bool integer_ohmicity() const;
    int integer_order() const;
};

class BathTemperature {
public:
    static BathTemperature from_temperature(double temperature);
    static BathTemperature from_beta(double beta);

    double beta() const noexcept { return beta_; }
    double temperature() const noexcept { return 1.0 / beta_; }

private:
    explicit BathTemperature(double beta) : beta_(beta) {}
    double beta_;
};

enum class EnvParameter { InverseTemperature, Temperature, Cutoff, Coupling, Ohmicity };

std::string_view to_string(EnvParameter p);
EnvParameter parse_env_parameter(std::string_view name);

// Everything that determines the bath correlation function.
struct BathParameters {
    OhmicSpectralDensity sd;
    BathTemperature temperature = BathTemperature::from_beta(1.0);

    double beta() const { return temperature.beta(); }
    double value(EnvParameter p) const;
    // Copy with parameter p shifted by delta (T and beta are kept consistent).
    BathParameters shifted(EnvParameter p, double delta) const;
};

namespace spectral {

double eval_J(const OhmicSpectralDensity& sd, double omega);

double bose_occupation(double beta, double omega);

// Thermalized spectral density on the whole real line; the value at omega = 0
// is the continuous limit (+inf for s < 1).
double eval_j_beta(const OhmicSpectralDensity& sd, double beta, double omega);

// Bath correlation function. Integer s uses the polygamma closed form, other s
// fall back to ttcf_quadrature.
Complex ttcf(const OhmicSpectralDensity& sd, double beta, double t);
Complex ttcf_closed_form(const OhmicSpectralDensity& sd, double beta, double t);
Complex ttcf_quadrature(const OhmicSpectralDensity& sd, double beta, double t);

// zeta(n); symbolic (polygamma/Hurwitz) for integer s, quadrature otherwise.
double moment(const OhmicSpectralDensity& sd, double beta, int n);
double moment_quadrature(const OhmicSpectralDensity& sd, double beta, int n);

// d zeta(n) / d eta. Analytic for integer s and eta in {beta, T, omega_c, lambda};
// quadrature of the differentiated integrand otherwise.
double moment_derivative(const BathParameters& bath, int n, EnvParameter eta);
double moment_derivative_quadrature(const BathParameters& bath, int n, EnvParameter eta);

inline constexpr int kMaxMomentOrder = 7;

// zeta(0..max_order) and, optionally, their derivatives with respect to one
// environment parameter.
struct MomentSet {
    int max_order = 0;
    std::array<double, kMaxMomentOrder + 1> value{};
    std::array<double, kMaxMomentOrder + 1> derivative{};
};

MomentSet moments(const BathParameters& bath, int max_order);
MomentSet moments(const BathParameters& bath, int max_order, EnvParameter eta);

// Upper integration limit beyond which w^power e^{-w/omega_c} is below e^-60
// of its peak.
double frequency_horizon(const OhmicSpectralDensity& sd, double power);

}  // namespace spectral
}  // namespace qprobe
