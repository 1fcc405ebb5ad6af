// mps.hpp: open-boundary matrix product state with a movable orthogonality
// center.
//
// Site tensors T(l, s, r) are stored column-major as a (chi_l d) x chi_r
// matrix; the same memory read as chi_l x (d chi_r) is the right-grouped view.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qprobe/bloch.hpp"
#include "qprobe/types.hpp"

namespace qprobe {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

class MpsState {
public:
    MpsState() = default;

    // Product state from one normalized local vector per site; all bonds 1, center 0.
    static MpsState product(const std::vector<VectorXc>& local);

    int size() const { return static_cast<int>(sites_.size()); }
    int phys_dim(int i) const { return dims_[i]; }
    int bond_left(int i) const { return static_cast<int>(sites_[i].rows()) / dims_[i]; }
    int bond_right(int i) const { return static_cast<int>(sites_[i].cols()); }
    int max_bond() const;
    int center() const { return center_; }

    MatrixXc& site(int i) { return sites_[i]; }
    const MatrixXc& site(int i) const { return sites_[i]; }
    // Replaces site i; the caller is responsible for the canonical form.
    void set_site(int i, MatrixXc t) { sites_[i] = std::move(t); }
    void set_center(int i) { center_ = i; }

    // QR/LQ sweeps; no truncation.
    void move_center(int target);

    // Norm read off the center tensor.
    double norm() const;

    double discarded_weight() const { return discarded_; }
    void add_discarded(double w) { discarded_ += w; }

    // Single-site reduced density matrix at the center.
    MatrixXc center_density() const;

private:
    std::vector<MatrixXc> sites_;
    std::vector<int> dims_;
    int center_ = 0;
    double discarded_ = 0.0;
};

// Probe (site 0) in cos(v/2)|0> + sin(v/2)|1>, v = pi/2 - alpha, chain in the vacuum.
MpsState init_mps(double alpha, int chain_sites, int d_max);

// Moves the center to site 0 and returns the probe's reduced density matrix.
DensityMatrix reduce_probe(MpsState& state);

// Mean occupation a^dag a at site i (i >= 1); moves the center to i.
double occupation(MpsState& state, int i);

}  // namespace qprobe
