#include "qprobe/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dual.hpp"
#include "qprobe/polygamma.hpp"
#include "qprobe/quadrature.hpp"

namespace qprobe {

using detail::Dual;

OhmicSpectralDensity OhmicSpectralDensity::make(double coupling, double ohmicity, double cutoff) {
    OhmicSpectralDensity sd{coupling, ohmicity, cutoff};
    sd.validate();
    return sd;
}

void OhmicSpectralDensity::validate() const {
    if (!(coupling > 0.0)) throw std::invalid_argument("spectral density: coupling must be > 0");
    if (!(ohmicity > 0.0)) throw std::invalid_argument("spectral density: ohmicity must be > 0");
    if (!(cutoff > 0.0)) throw std::invalid_argument("spectral density: cutoff must be > 0");
}

bool OhmicSpectralDensity::integer_ohmicity() const {
    return ohmicity <= 40.0 && std::abs(ohmicity - std::round(ohmicity)) < 1e-12;
}

int OhmicSpectralDensity::integer_order() const {
    if (!integer_ohmicity()) throw std::logic_error("spectral density: ohmicity is not an integer");
    return static_cast<int>(std::lround(ohmicity));
}

BathTemperature BathTemperature::from_temperature(double temperature) {
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw std::invalid_argument("temperature must be finite and > 0");
    return BathTemperature(1.0 / temperature);
}

BathTemperature BathTemperature::from_beta(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be finite and > 0");
    return BathTemperature(beta);
}

std::string_view to_string(EnvParameter p) {
    switch (p) {
        case EnvParameter::InverseTemperature: return "beta";
        case EnvParameter::Temperature: return "T";
        case EnvParameter::Cutoff: return "omega_c";
        case EnvParameter::Coupling: return "lambda";
        case EnvParameter::Ohmicity: return "s";
    }
    return "?";
}

EnvParameter parse_env_parameter(std::string_view name) {
    if (name == "beta") return EnvParameter::InverseTemperature;
    if (name == "T" || name == "temperature") return EnvParameter::Temperature;
    if (name == "omega_c" || name == "cutoff") return EnvParameter::Cutoff;
    if (name == "lambda" || name == "coupling") return EnvParameter::Coupling;
    if (name == "s" || name == "ohmicity") return EnvParameter::Ohmicity;
    throw std::invalid_argument("unknown environment parameter: " + std::string(name));
}

double BathParameters::value(EnvParameter p) const {
    switch (p) {
        case EnvParameter::InverseTemperature: return temperature.beta();
        case EnvParameter::Temperature: return temperature.temperature();
        case EnvParameter::Cutoff: return sd.cutoff;
        case EnvParameter::Coupling: return sd.coupling;
        case EnvParameter::Ohmicity: return sd.ohmicity;
    }
    return 0.0;
}

BathParameters BathParameters::shifted(EnvParameter p, double delta) const {
    BathParameters out = *this;
    switch (p) {
        case EnvParameter::InverseTemperature:
            out.temperature = BathTemperature::from_beta(temperature.beta() + delta);
            break;
        case EnvParameter::Temperature:
            out.temperature = BathTemperature::from_temperature(temperature.temperature() + delta);
            break;
        case EnvParameter::Cutoff: out.sd.cutoff += delta; break;
        case EnvParameter::Coupling: out.sd.coupling += delta; break;
        case EnvParameter::Ohmicity: out.sd.ohmicity += delta; break;
    }
    out.sd.validate();
    return out;
}

namespace spectral {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// coth(beta w / 2) = 1 + 2 n(w), written without overflow for large beta w.
double coth_half(double beta, double omega) { return 1.0 + 2.0 / std::expm1(beta * omega); }

// 1 / sinh^2(beta w / 2)
double inv_sinh2_half(double beta, double omega) {
    const double e = std::exp(-beta * omega);
    const double den = -std::expm1(-beta * omega);
    return 4.0 * e / (den * den);
}

quad::Options moment_options() {
    quad::Options o;
    o.abs_tol = 1e-12;
    o.rel_tol = 1e-13;
    return o;
}

std::vector<double> panels(double upper, double width) {
    std::vector<double> pts{0.0};
    const int count = std::max(1, static_cast<int>(std::ceil(upper / width)));
    for (int i = 1; i <= count; ++i) pts.push_back(upper * i / count);
    return pts;
}

double ipow(double x, int k) { return std::pow(x, k); }
Dual ipow(Dual x, int k) { return detail::pow(x, k); }

double hurwitz(int m, double a) { return hurwitz_zeta(m, a); }
Dual hurwitz(int m, Dual a) { return {hurwitz_zeta(m, a.v), -m * hurwitz_zeta(m + 1, a.v) * a.d}; }

// zeta(n) for integer s:
//   odd n:  -lambda (s+n)! omega_c^(n+2)
//   even n: lambda omega_c^(1-s) (s+n)! [omega_c^m + 2 beta^-m zeta_H(m, 1 + 1/(beta omega_c))],  m = s+n+1
// Templated so that dual numbers carry the derivative with respect to one parameter.
template <class T>
T symbolic_moment(T coupling, int s, T cutoff, T beta, int n) {
    const int m = s + n + 1;
    const T prefactor = coupling * ipow(cutoff, 1 - s) * T(factorial(s + n));
    if (n % 2 == 1) return T(-1.0) * prefactor * ipow(cutoff, m);
    const T a = T(1.0) + T(1.0) / (beta * cutoff);
    const T thermal = T(2.0) * hurwitz(m, a) / ipow(beta, m);
    return prefactor * (ipow(cutoff, m) + thermal);
}

// omega^n J(omega) times the even/odd thermal weight of zeta(n)
double moment_integrand(const OhmicSpectralDensity& sd, double beta, int n, double omega) {
    if (omega <= 0.0) return 0.0;
    const double base = std::pow(omega, n) * eval_J(sd, omega);
    return (n % 2 == 0) ? base * coth_half(beta, omega) : -base;
}

}  // namespace

double frequency_horizon(const OhmicSpectralDensity& sd, double power) {
    // Work in x = w / omega_c: x^p e^{-x} drops below e^{-60} times its peak.
    const double p = std::max(power, 0.0);
    const double log_peak = p > 0.0 ? p * std::log(p) - p : 0.0;
    double x = std::max(p, 1.0);
    while (p * std::log(x) - x > log_peak - 60.0) x += 0.5;
    return x * sd.cutoff;
}

double eval_J(const OhmicSpectralDensity& sd, double omega) {
    if (omega < 0.0) throw std::domain_error("eval_J: negative frequency (use eval_j_beta)");
    if (omega == 0.0) return 0.0;
    const double x = omega / sd.cutoff;
    return sd.coupling * sd.cutoff * std::pow(x, sd.ohmicity) * std::exp(-x);
}

double bose_occupation(double beta, double omega) {
    const double x = beta * omega;
    if (x == 0.0) throw std::domain_error("bose_occupation: pole at beta*omega = 0");
    return 1.0 / std::expm1(x);
}

double eval_j_beta(const OhmicSpectralDensity& sd, double beta, double omega) {
    if (omega > 0.0) {
        // (1 + n) J = J / (1 - e^{-beta w})
        return eval_J(sd, omega) / -std::expm1(-beta * omega);
    }
    if (omega < 0.0) {
        return eval_J(sd, -omega) / std::expm1(-beta * omega);
    }
    // J(w)/(beta w) as w -> 0: lambda w^(s-1) omega_c^(1-s) / beta
    if (sd.ohmicity > 1.0) return 0.0;
    if (sd.ohmicity == 1.0) return sd.coupling / beta;
    return std::numeric_limits<double>::infinity();
}

Complex ttcf_closed_form(const OhmicSpectralDensity& sd, double beta, double t) {
    const int s = sd.integer_order();
    const double wc = sd.cutoff;
    const double lam = sd.coupling;
    const Complex one_plus{1.0, wc * t};
    const Complex vacuum = lam * factorial(s) * wc * wc / std::pow(one_plus, s + 1);
    const double bw = beta * wc;
    const Complex z_plus = 1.0 + Complex{1.0, wc * t} / bw;
    const Complex z_minus = 1.0 + Complex{1.0, -wc * t} / bw;
    const double pref = lam * wc * wc * std::pow(-1.0 / bw, s + 1);
    return vacuum + pref * (polygamma(s, z_plus) + polygamma(s, z_minus));
}

Complex ttcf_quadrature(const OhmicSpectralDensity& sd, double beta, double t) {
    const double upper = frequency_horizon(sd, sd.ohmicity);
    const double width = std::min(sd.cutoff, t != 0.0 ? kPi / std::abs(t) : sd.cutoff);
    const auto pts = panels(upper, width);
    quad::Options opts;
    opts.abs_tol = 1e-12;
    auto f = [&](double w) -> Complex {
        const double J = eval_J(sd, w);
        return {J * coth_half(beta, w) * std::cos(w * t), -J * std::sin(w * t)};
    };
    return quad::integrate_panels(std::function<Complex(double)>(f), pts, opts).value;
}

Complex ttcf(const OhmicSpectralDensity& sd, double beta, double t) {
    return sd.integer_ohmicity() ? ttcf_closed_form(sd, beta, t) : ttcf_quadrature(sd, beta, t);
}

double moment_quadrature(const OhmicSpectralDensity& sd, double beta, int n) {
    if (n < 0) throw std::invalid_argument("moment: order must be non-negative");
    const double upper = frequency_horizon(sd, sd.ohmicity + n);
    const auto pts = panels(upper, sd.cutoff);
    auto f = [&](double w) { return moment_integrand(sd, beta, n, w); };
    return quad::integrate_panels(std::function<double(double)>(f), pts, moment_options()).value;
}

double moment(const OhmicSpectralDensity& sd, double beta, int n) {
    if (n < 0) throw std::invalid_argument("moment: order must be non-negative");
    if (!sd.integer_ohmicity()) return moment_quadrature(sd, beta, n);
    return symbolic_moment<double>(sd.coupling, sd.integer_order(), sd.cutoff, beta, n);
}

double moment_derivative_quadrature(const BathParameters& bath, int n, EnvParameter eta) {
    const auto& sd = bath.sd;
    const double beta = bath.beta();
    const double upper = frequency_horizon(sd, sd.ohmicity + n + 1);
    const auto pts = panels(upper, sd.cutoff);
    const bool even = n % 2 == 0;
    auto f = [&](double w) -> double {
        if (w <= 0.0) return 0.0;
        const double base = std::pow(w, n) * eval_J(sd, w);
        const double weight = even ? coth_half(beta, w) : -1.0;
        switch (eta) {
            case EnvParameter::Coupling: return base * weight / sd.coupling;
            case EnvParameter::Ohmicity: return base * weight * (std::log(w) - std::log(sd.cutoff));
            case EnvParameter::Cutoff:
                return base * weight * ((1.0 - sd.ohmicity) / sd.cutoff + w / (sd.cutoff * sd.cutoff));
            case EnvParameter::InverseTemperature:
                return even ? -base * 0.5 * w * inv_sinh2_half(beta, w) : 0.0;
            case EnvParameter::Temperature:
                return even ? beta * beta * base * 0.5 * w * inv_sinh2_half(beta, w) : 0.0;
        }
        return 0.0;
    };
    return quad::integrate_panels(std::function<double(double)>(f), pts, moment_options()).value;
}

double moment_derivative(const BathParameters& bath, int n, EnvParameter eta) {
    const auto& sd = bath.sd;
    if (!sd.integer_ohmicity() || eta == EnvParameter::Ohmicity) return moment_derivative_quadrature(bath, n, eta);
    Dual coupling{sd.coupling}, cutoff{sd.cutoff}, beta{bath.beta()};
    switch (eta) {
        case EnvParameter::Coupling: coupling = Dual::variable(sd.coupling); break;
        case EnvParameter::Cutoff: cutoff = Dual::variable(sd.cutoff); break;
        case EnvParameter::InverseTemperature: beta = Dual::variable(bath.beta()); break;
        case EnvParameter::Temperature: {
            beta = Dual(1.0) / Dual::variable(bath.temperature.temperature());
            break;
        }
        case EnvParameter::Ohmicity: break;
    }
    return symbolic_moment<Dual>(coupling, sd.integer_order(), cutoff, beta, n).d;
}

MomentSet moments(const BathParameters& bath, int max_order) {
    if (max_order < 0 || max_order > kMaxMomentOrder) throw std::invalid_argument("moments: order out of range");
    MomentSet set;
    set.max_order = max_order;
    for (int n = 0; n <= max_order; ++n) set.value[n] = moment(bath.sd, bath.beta(), n);
    return set;
}

MomentSet moments(const BathParameters& bath, int max_order, EnvParameter eta) {
    MomentSet set = moments(bath, max_order);
    for (int n = 0; n <= max_order; ++n) set.derivative[n] = moment_derivative(bath, n, eta);
    return set;
}

}  // namespace spectral
}  // namespace qprobe
