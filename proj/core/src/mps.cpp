#include "qprobe/mps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qprobe {

MpsState MpsState::product(const std::vector<VectorXc>& local) {
    if (local.empty()) throw std::invalid_argument("MPS: no sites");
    MpsState s;
    for (const auto& v : local) {
        if (v.size() < 1) throw std::invalid_argument("MPS: empty local space");
        s.dims_.push_back(static_cast<int>(v.size()));
        s.sites_.push_back(v.normalized());
    }
    s.center_ = 0;
    return s;
}

int MpsState::max_bond() const {
    int m = 1;
    for (const auto& t : sites_) m = std::max(m, static_cast<int>(t.cols()));
    return m;
}

void MpsState::move_center(int target) {
    if (target < 0 || target >= size()) throw std::out_of_range("MPS: center out of range");
    while (center_ < target) {
        const int i = center_;
        MatrixXc& a = sites_[i];
        const Eigen::Index rows = a.rows(), cols = a.cols();
        const Eigen::Index k = std::min(rows, cols);
        Eigen::HouseholderQR<MatrixXc> qr(a);
        MatrixXc q = qr.householderQ() * MatrixXc::Identity(rows, k);
        MatrixXc r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
        a = std::move(q);
        const int d = dims_[i + 1];
        const Eigen::Index chi_r = sites_[i + 1].cols();
        Eigen::Map<const MatrixXc> next(sites_[i + 1].data(), cols, d * chi_r);
        MatrixXc updated(k * d, chi_r);
        Eigen::Map<MatrixXc>(updated.data(), k, d * chi_r).noalias() = r * next;
        sites_[i + 1] = std::move(updated);
        ++center_;
    }
    while (center_ > target) {
        const int i = center_;
        const int d = dims_[i];
        const Eigen::Index chi_l = bond_left(i), chi_r = sites_[i].cols();
        Eigen::Map<const MatrixXc> right(sites_[i].data(), chi_l, d * chi_r);
        // right = L Q with Q row-orthonormal, from the QR of its adjoint.
        const Eigen::Index k = std::min(chi_l, d * chi_r);
        Eigen::HouseholderQR<MatrixXc> qr(right.adjoint());
        MatrixXc q = qr.householderQ() * MatrixXc::Identity(d * chi_r, k);
        MatrixXc l = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
        MatrixXc updated(k * d, chi_r);
        Eigen::Map<MatrixXc>(updated.data(), k, d * chi_r) = q.adjoint();
        sites_[i] = std::move(updated);
        sites_[i - 1] = sites_[i - 1] * l.adjoint();
        --center_;
    }
}

double MpsState::norm() const { return sites_[center_].norm(); }

MatrixXc MpsState::center_density() const {
    const MatrixXc& t = sites_[center_];
    const int d = dims_[center_];
    const Eigen::Index chi_l = t.rows() / d, chi_r = t.cols();
    MatrixXc rho = MatrixXc::Zero(d, d);
    for (Eigen::Index r = 0; r < chi_r; ++r) {
        // slice(l, s) = T(l, s, r)
        Eigen::Map<const MatrixXc> slice(t.data() + r * chi_l * d, chi_l, d);
        rho.noalias() += slice.transpose() * slice.conjugate();
    }
    return rho;
}

MpsState init_mps(double alpha, int chain_sites, int d_max) {
    if (chain_sites < 1) throw std::invalid_argument("init_mps: chain must have at least one site");
    if (d_max < 2) throw std::invalid_argument("init_mps: d_max must be >= 2");
    const double v = 0.5 * kPi - alpha;
    std::vector<VectorXc> local;
    VectorXc probe(2);
    probe << std::cos(0.5 * v), std::sin(0.5 * v);
    local.push_back(probe);
    VectorXc vac = VectorXc::Zero(d_max);
    vac(0) = 1.0;
    for (int i = 0; i < chain_sites; ++i) local.push_back(vac);
    return MpsState::product(local);
}

DensityMatrix reduce_probe(MpsState& state) {
    state.move_center(0);
    MatrixXc rho = state.center_density();
    rho /= rho.trace().real();
    Mat2 m = 0.5 * (rho + rho.adjoint());
    return DensityMatrix::unchecked(m);
}

double occupation(MpsState& state, int i) {
    if (i < 1 || i >= state.size()) throw std::out_of_range("occupation: not a chain site");
    state.move_center(i);
    const MatrixXc rho = state.center_density();
    double n = 0.0;
    for (Eigen::Index k = 0; k < rho.rows(); ++k) n += static_cast<double>(k) * rho(k, k).real();
    return n / rho.trace().real();
}

}  // namespace qprobe
