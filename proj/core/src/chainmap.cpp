#include "qprobe/chainmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qprobe/quadrature.hpp"

namespace qprobe {

double DiscretizedMeasure::mass() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

ChainCoefficients ChainCoefficients::from_recurrence(const Recurrence& r) {
    ChainCoefficients c;
    c.omega = r.a;
    c.kappa.resize(r.b.size());
    std::transform(r.b.begin(), r.b.end(), c.kappa.begin(), [](double b) { return std::sqrt(b); });
    return c;
}

namespace chain {

namespace {

struct Peak {
    double value = 0.0;
    double location = 0.0;
};

Peak peak_j_beta(const OhmicSpectralDensity& sd, double beta) {
    Peak p;
    const double hi = 60.0 * sd.cutoff * std::max(1.0, sd.ohmicity);
    for (int i = 1; i <= 6000; ++i) {
        const double w = hi * i / 6000.0;
        const double v = spectral::eval_j_beta(sd, beta, w);
        if (v > p.value) p = {v, w};
    }
    return p;
}

}  // namespace

double default_support_max(const OhmicSpectralDensity& sd, double beta) {
    sd.validate();
    const Peak peak = peak_j_beta(sd, beta);
    const double limit = kTailThreshold * peak.value;
    // J_beta(-w) = e^{-beta w} J_beta(w), so the positive tail decides; it decays
    // monotonically beyond the peak.
    double w = 0.5 * std::ceil(2.0 * peak.location);
    while (spectral::eval_j_beta(sd, beta, w) >= limit) w += 0.5;
    return w;
}

DiscretizedMeasure thermalized_measure(const OhmicSpectralDensity& sd, double beta, double support_max,
                                       int node_count) {
    sd.validate();
    if (!(beta > 0.0)) throw std::invalid_argument("thermalized_measure: beta must be > 0");
    if (!(support_max > 0.0)) throw std::invalid_argument("thermalized_measure: support must be > 0");
    if (node_count < 2 * kPanelNodes) node_count = 2 * kPanelNodes;
    const double peak = peak_j_beta(sd, beta).value;
    const double tail = std::max(spectral::eval_j_beta(sd, beta, support_max),
                                 spectral::eval_j_beta(sd, beta, -support_max));
    if (tail > kTailThreshold * peak)
        throw std::invalid_argument("thermalized_measure: support_max = " + std::to_string(support_max) +
                                    " truncates the measure (tail/peak = " + std::to_string(tail / peak) + ")");

    const int panels = (node_count + 2 * kPanelNodes - 1) / (2 * kPanelNodes);
    const quad::Rule rule = quad::gauss_legendre(kPanelNodes);
    DiscretizedMeasure m;
    m.support_max = support_max;
    m.nodes.reserve(2 * panels * kPanelNodes);
    m.weights.reserve(2 * panels * kPanelNodes);
    const double h = support_max / panels;
    for (int p = -panels; p < panels; ++p) {
        const double lo = p * h;
        const double mid = lo + 0.5 * h;
        for (int i = 0; i < kPanelNodes; ++i) {
            const double x = mid + 0.5 * h * rule.nodes[i];
            m.nodes.push_back(x);
            m.weights.push_back(0.5 * h * rule.weights[i] * spectral::eval_j_beta(sd, beta, x));
        }
    }
    return m;
}

Recurrence recurrence_coefficients(const DiscretizedMeasure& measure, int n) {
    const int m = static_cast<int>(measure.nodes.size());
    if (n < 1) throw std::invalid_argument("recurrence_coefficients: N must be >= 1");
    if (m < n) throw std::invalid_argument("recurrence_coefficients: fewer nodes than requested coefficients");
    const Eigen::Map<const Eigen::VectorXd> x(measure.nodes.data(), m);
    const Eigen::Map<const Eigen::VectorXd> w(measure.weights.data(), m);
    if (w.minCoeff() < 0.0) throw std::invalid_argument("recurrence_coefficients: negative weight");
    const double mass = w.sum();
    if (!(mass > 0.0)) throw std::invalid_argument("recurrence_coefficients: zero mass");

    Eigen::MatrixXd q(m, n);
    q.col(0) = w.cwiseSqrt() / std::sqrt(mass);
    Recurrence r;
    r.a.resize(n);
    r.b.resize(n);
    r.b[0] = mass;
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXd v = x.cwiseProduct(q.col(k));
        r.a[k] = q.col(k).dot(v);
        if (k + 1 == n) break;
        v -= r.a[k] * q.col(k);
        if (k > 0) v -= std::sqrt(r.b[k]) * q.col(k - 1);
        for (int pass = 0; pass < 2; ++pass) {
            const Eigen::VectorXd proj = q.leftCols(k + 1).transpose() * v;
            v -= q.leftCols(k + 1) * proj;
        }
        const double norm2 = v.squaredNorm();
        const double scale = std::max(1.0, r.a[k] * r.a[k]);
        if (!(norm2 > 1e-26 * scale))
            throw ConvergenceError("recurrence_coefficients: b_" + std::to_string(k + 1) +
                                       " lost positivity (too few nodes)",
                                   norm2);
        r.b[k + 1] = norm2;
        q.col(k + 1) = v / std::sqrt(norm2);
    }
    return r;
}

ChainCoefficients chain_coefficients(const OhmicSpectralDensity& sd, double beta, int n, const ChainOptions& opts) {
    if (n < 1) throw std::invalid_argument("chain_coefficients: N must be >= 1");
    const double wmax = opts.support_max > 0.0 ? opts.support_max : default_support_max(sd, beta);
    const int nodes = opts.node_count > 0 ? opts.node_count : 20 * n;
    return ChainCoefficients::from_recurrence(recurrence_coefficients(thermalized_measure(sd, beta, wmax, nodes), n));
}

}  // namespace chain

ChainHamiltonian chain_hamiltonian(const ChainCoefficients& coeffs, const ProbeConfig& probe) {
    if (coeffs.size() < 1 || coeffs.kappa.size() != coeffs.omega.size())
        throw std::invalid_argument("chain_hamiltonian: inconsistent chain coefficients");
    ChainHamiltonian h{probe, coeffs, {}};
    using K = ChainTerm::Kind;
    h.terms.push_back({K::ProbeField, 0, 0, probe.omega_s});
    h.terms.push_back({K::ProbeChainCoupling, 0, 1, coeffs.kappa[0]});
    for (int n = 0; n < coeffs.size(); ++n) h.terms.push_back({K::ModeFrequency, n + 1, n + 1, coeffs.omega[n]});
    for (int n = 1; n < coeffs.size(); ++n) h.terms.push_back({K::Hopping, n, n + 1, coeffs.kappa[n]});
    return h;
}

}  // namespace qprobe
