// chainmap.hpp: thermalized chain mapping of the bath.
//
// The thermal bath is replaced by a zero-temperature bath with spectral density
// J_beta(w) = J(|w|) sign(w) (1 + coth(beta w / 2)) / 2 on the whole real line.
// Orthogonal polynomials for d mu = J_beta dw give the nearest-neighbour chain
//
//   H_C = w_S sigma_z / 2 + kappa_0 A(theta) (c_0 + c_0^dag)
//         + sum_n w_n c_n^dag c_n + sum_{n>=1} kappa_n (c_{n-1} c_n^dag + c_{n-1}^dag c_n)
//
// with w_n = a_n and kappa_n = sqrt(b_n) from the three-term recurrence.

#pragma once

#include <vector>

#include "qprobe/spectral.hpp"
#include "qprobe/tcl.hpp"

namespace qprobe {

struct DiscretizedMeasure {
    double support_max = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;

    double mass() const;
};

struct Recurrence {
    std::vector<double> a;  // a_0 .. a_{N-1}
    std::vector<double> b;  // b_0 = mass, b_1 .. b_{N-1}
};

struct ChainCoefficients {
    std::vector<double> omega;  // site frequencies
    std::vector<double> kappa;  // kappa[0]: probe-chain coupling, kappa[n]: bond (n-1, n)

    int size() const { return static_cast<int>(omega.size()); }
    static ChainCoefficients from_recurrence(const Recurrence& r);
};

namespace chain {

inline constexpr int kPanelNodes = 64;
inline constexpr double kTailThreshold = 1e-12;

// Smallest support bound with J_beta(+-w_max) < 1e-12 max J_beta, rounded up to 0.5.
double default_support_max(const OhmicSpectralDensity& sd, double beta);

// Composite 64-point Gauss–Legendre nodes on [-w_max, 0] and [0, w_max]; node_count
// is rounded up to a multiple of 128. Throws std::invalid_argument if the tails at
// +-w_max exceed 1e-12 of the peak.
DiscretizedMeasure thermalized_measure(const OhmicSpectralDensity& sd, double beta, double support_max,
                                       int node_count);

// Lanczos with full reorthogonalization on the discrete measure. Throws
// std::invalid_argument if node_count < N, ConvergenceError if some b_n loses
// positivity (the message carries the index).
Recurrence recurrence_coefficients(const DiscretizedMeasure& measure, int n);

struct ChainOptions {
    double support_max = 0.0;  // 0: default_support_max
    int node_count = 0;        // 0: 20 N
};

ChainCoefficients chain_coefficients(const OhmicSpectralDensity& sd, double beta, int n,
                                     const ChainOptions& opts = {});

}  // namespace chain

// Nearest-neighbour term list; site 0 is the probe, site k >= 1 the chain mode k-1.
struct ChainTerm {
    enum class Kind { ProbeField, ProbeChainCoupling, ModeFrequency, Hopping };
    Kind kind;
    int site_a;
    int site_b;  // equals site_a for single-site terms
    double coefficient;
};

struct ChainHamiltonian {
    ProbeConfig probe;
    ChainCoefficients chain;
    std::vector<ChainTerm> terms;

    int sites() const { return chain.size() + 1; }
};

ChainHamiltonian chain_hamiltonian(const ChainCoefficients& coeffs, const ProbeConfig& probe);

}  // namespace qprobe
