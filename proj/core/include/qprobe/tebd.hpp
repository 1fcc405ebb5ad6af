// tebd.hpp: second-order Trotterized two-site gate evolution of the probe +
// chain MPS.
//
// Bonds b = 0..n-1 join sites b and b+1. Even bonds form layer A, odd bonds
// layer B; one step is A(dt/2) B(dt) A(dt/2), and consecutive A half-steps are
// fused between samples. Layer A sweeps left to right, layer B right to left,
// so every gate acts next to the orthogonality center.

#pragma once

#include <string>
#include <vector>

#include "qprobe/chainmap.hpp"
#include "qprobe/mps.hpp"
#include "qprobe/tcl.hpp"

namespace qprobe {

struct TebdConfig {
    double dt = 0.01;
    int chi = 30;
    double sv_cutoff = 1e-10;  // relative to the largest singular value
    int d_max = 8;
    int n = 60;                 // chain sites
    double sample_interval = 0.05;
    double truncation_alarm = 1e-6;   // per-step discarded weight
    double boundary_threshold = 1e-8; // occupation of the last two sites

    static TebdConfig desk();
    static TebdConfig full();
    void validate() const;
};

struct TruncationStats {
    double discarded = 0.0;           // summed over all gates
    double max_step_discarded = 0.0;  // largest per-step sum
    int alarm_steps = 0;              // steps above TebdConfig::truncation_alarm
    int max_bond = 1;
};

// Gate set for a chain Hamiltonian and fixed dt; immutable after construction.
class TebdPropagator {
public:
    TebdPropagator(const ChainHamiltonian& h, const TebdConfig& config);

    int sites() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& local_dims() const { return dims_; }

    // Two-site Hamiltonian of bond b, two-site index s + d_b t.
    const MatrixXc& bond_hamiltonian(int b) const { return h_bond_[b]; }

    // One full step A(dt/2) B(dt) A(dt/2); center 0 on entry and exit.
    TruncationStats step(MpsState& state) const;
    // `steps` steps with fused half-steps; center 0 on entry and exit.
    TruncationStats run(MpsState& state, int steps) const;

private:
    enum class Tau { Half, Full };
    // Each returns the discarded weight of its gates and updates max_bond.
    double sweep_right(MpsState& state, Tau tau, int& max_bond) const;  // layer A
    double sweep_left(MpsState& state, int& max_bond) const;            // layer B, always dt
    double apply_gate(MpsState& state, int bond, const MatrixXc& gate, bool center_right, int& max_bond) const;

    TebdConfig config_;
    std::vector<int> dims_;
    std::vector<MatrixXc> h_bond_;
    std::vector<MatrixXc> gate_half_;
    std::vector<MatrixXc> gate_full_;
};

// Free function form of a single step.
TruncationStats trotter_step(MpsState& state, const ChainHamiltonian& h, const TebdConfig& config);

struct TebdMetadata {
    int max_bond = 1;
    double total_discarded = 0.0;
    double max_step_discarded = 0.0;
    int alarm_steps = 0;
    double max_boundary_occupation = 0.0;
    bool boundary_contaminated = false;
    std::vector<std::string> warnings;
    double wall_seconds = 0.0;
    int steps = 0;

    bool converged() const { return alarm_steps == 0 && !boundary_contaminated; }
    std::string to_json() const;
};

struct TebdTrajectory {
    Trajectory trajectory;
    TebdMetadata metadata;
};

// Samples at multiples of config.sample_interval up to t_final (inclusive).
TebdTrajectory evolve_tebd(const TebdConfig& config, const ChainCoefficients& chain, const ProbeConfig& probe,
                           double alpha, double t_final);

}  // namespace qprobe
