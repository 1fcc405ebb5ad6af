#include "qprobe/tebd.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qprobe {

TebdConfig TebdConfig::desk() { return {}; }

TebdConfig TebdConfig::full() {
    TebdConfig c;
    c.chi = 50;
    c.d_max = 12;
    c.n = 150;
    return c;
}

void TebdConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("TEBD: dt must be > 0");
    if (chi < 2) throw std::invalid_argument("TEBD: chi must be >= 2");
    if (d_max < 2) throw std::invalid_argument("TEBD: d_max must be >= 2");
    if (n < 2) throw std::invalid_argument("TEBD: chain length must be >= 2");
    if (!(sv_cutoff >= 0.0 && sv_cutoff < 1.0)) throw std::invalid_argument("TEBD: sv_cutoff must lie in [0, 1)");
    if (!(sample_interval > 0.0)) throw std::invalid_argument("TEBD: sample interval must be > 0");
    const double k = sample_interval / dt;
    if (std::abs(k - std::round(k)) > 1e-9 * k || std::round(k) < 1)
        throw std::invalid_argument("TEBD: sample interval must be a multiple of dt");
}

namespace {

MatrixXc kron(const MatrixXc& y, const MatrixXc& x) {
    // (Y (x) X)[s + dx t, s' + dx t'] = Y[t, t'] X[s, s']
    MatrixXc out(y.rows() * x.rows(), y.cols() * x.cols());
    for (Eigen::Index t = 0; t < y.rows(); ++t)
        for (Eigen::Index tp = 0; tp < y.cols(); ++tp)
            out.block(t * x.rows(), tp * x.cols(), x.rows(), x.cols()) = y(t, tp) * x;
    return out;
}

MatrixXc annihilation(int d) {
    MatrixXc a = MatrixXc::Zero(d, d);
    for (int k = 1; k < d; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

MatrixXc exp_hermitian(const MatrixXc& h, double tau) {
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(h);
    const VectorXc phase = (es.eigenvalues().cast<Complex>() * Complex(0.0, -tau)).array().exp();
    return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TebdPropagator::TebdPropagator(const ChainHamiltonian& h, const TebdConfig& config) : config_(config) {
    config_.validate();
    const int modes = h.chain.size();
    if (modes < 1) throw std::invalid_argument("TEBD: empty chain");
    dims_.assign(modes + 1, config_.d_max);
    dims_[0] = 2;

    const int d = config_.d_max;
    const MatrixXc a = annihilation(d);
    const MatrixXc ad = a.adjoint();
    const MatrixXc num = ad * a;
    const MatrixXc id_d = MatrixXc::Identity(d, d);
    const MatrixXc id_2 = MatrixXc::Identity(2, 2);
    const int last = modes;  // index of the last site

    // Mode frequency on site j (mode j-1): split between bonds j-1 and j except at the end.
    auto share = [&](int site) { return site == last ? 1.0 : 0.5; };

    h_bond_.resize(modes);
    h_bond_[0] = kron(id_d, MatrixXc(h.probe.hamiltonian())) +
                 h.chain.kappa[0] * kron(a + ad, MatrixXc(h.probe.interaction())) +
                 share(1) * h.chain.omega[0] * kron(num, id_2);
    for (int b = 1; b < modes; ++b) {
        h_bond_[b] = h.chain.kappa[b] * (kron(ad, a) + kron(a, ad)) + 0.5 * h.chain.omega[b - 1] * kron(id_d, num) +
                     share(b + 1) * h.chain.omega[b] * kron(num, id_d);
    }
    gate_half_.resize(modes);
    gate_full_.resize(modes);
    for (int b = 0; b < modes; ++b) {
        if (b % 2 == 0) gate_half_[b] = exp_hermitian(h_bond_[b], 0.5 * config_.dt);
        gate_full_[b] = exp_hermitian(h_bond_[b], config_.dt);
    }
}

double TebdPropagator::apply_gate(MpsState& state, int b, const MatrixXc& gate, bool center_right,
                                  int& max_bond) const {
    const int dl = dims_[b], dr = dims_[b + 1];
    const Eigen::Index chi_l = state.bond_left(b);
    const Eigen::Index chi_m = state.bond_right(b);
    const Eigen::Index chi_r = state.bond_right(b + 1);

    Eigen::Map<const MatrixXc> right(state.site(b + 1).data(), chi_m, dr * chi_r);
    MatrixXc theta = state.site(b) * right;  // (chi_l dl) x (dr chi_r)

    // theta(l, p, r) with p = s + dl t; apply the gate on p slice by slice.
    const Eigen::Index pd = dl * dr;
    const MatrixXc gt = gate.transpose();
    MatrixXc tmp(chi_l, pd);
    for (Eigen::Index r = 0; r < chi_r; ++r) {
        Eigen::Map<MatrixXc> slice(theta.data() + r * chi_l * pd, chi_l, pd);
        tmp.noalias() = slice * gt;
        slice = tmp;
    }

    Eigen::BDCSVD<MatrixXc> svd(theta, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double total = sv.squaredNorm();
    Eigen::Index keep = 0;
    const Eigen::Index cap = std::min<Eigen::Index>(config_.chi, sv.size());
    while (keep < cap && sv(keep) > config_.sv_cutoff * sv(0)) ++keep;
    keep = std::max<Eigen::Index>(keep, 1);
    const double kept = sv.head(keep).squaredNorm();
    const double discarded = total > 0.0 ? std::max(0.0, 1.0 - kept / total) : 0.0;
    const Eigen::VectorXd s = sv.head(keep) / std::sqrt(kept);

    MatrixXc left_new = svd.matrixU().leftCols(keep);
    MatrixXc right_rows = svd.matrixV().leftCols(keep).adjoint();  // keep x (dr chi_r)
    if (center_right)
        right_rows = s.cast<Complex>().asDiagonal() * right_rows;
    else
        left_new = left_new * s.cast<Complex>().asDiagonal();

    MatrixXc site_r(keep * dr, chi_r);
    Eigen::Map<MatrixXc>(site_r.data(), keep, dr * chi_r) = right_rows;
    state.set_site(b, std::move(left_new));
    state.set_site(b + 1, std::move(site_r));
    state.set_center(center_right ? b + 1 : b);
    max_bond = std::max<int>(max_bond, static_cast<int>(keep));
    return discarded;
}

double TebdPropagator::sweep_right(MpsState& state, Tau tau, int& max_bond) const {
    const auto& gates = tau == Tau::Half ? gate_half_ : gate_full_;
    double discarded = 0.0;
    state.move_center(0);
    for (int b = 0; b + 1 < sites(); ++b) {
        if (b % 2 == 0)
            discarded += apply_gate(state, b, gates[b], true, max_bond);
        else
            state.move_center(b + 1);
    }
    return discarded;
}

double TebdPropagator::sweep_left(MpsState& state, int& max_bond) const {
    double discarded = 0.0;
    state.move_center(sites() - 1);
    for (int b = sites() - 2; b >= 0; --b) {
        if (b % 2 == 1)
            discarded += apply_gate(state, b, gate_full_[b], false, max_bond);
        else
            state.move_center(b);
    }
    return discarded;
}

TruncationStats TebdPropagator::run(MpsState& state, int steps) const {
    if (state.size() != sites()) throw std::invalid_argument("TEBD: state and Hamiltonian sizes differ");
    TruncationStats st;
    st.max_bond = state.max_bond();
    if (steps <= 0) return st;
    double pending = sweep_right(state, Tau::Half, st.max_bond);
    for (int k = 0; k < steps; ++k) {
        double step_w = pending + sweep_left(state, st.max_bond);
        const bool last = (k + 1 == steps);
        // The closing A layer is split evenly between this step and the next.
        const double a = sweep_right(state, last ? Tau::Half : Tau::Full, st.max_bond);
        step_w += last ? a : 0.5 * a;
        pending = last ? 0.0 : 0.5 * a;
        st.discarded += step_w;
        st.max_step_discarded = std::max(st.max_step_discarded, step_w);
        if (step_w > config_.truncation_alarm) ++st.alarm_steps;
    }
    state.move_center(0);
    state.add_discarded(st.discarded);
    return st;
}

TruncationStats TebdPropagator::step(MpsState& state) const { return run(state, 1); }

TruncationStats trotter_step(MpsState& state, const ChainHamiltonian& h, const TebdConfig& config) {
    return TebdPropagator(h, config).step(state);
}

std::string TebdMetadata::to_json() const {
    nlohmann::json j;
    j["max_bond"] = max_bond;
    j["total_discarded_weight"] = total_discarded;
    j["max_step_discarded_weight"] = max_step_discarded;
    j["alarm_steps"] = alarm_steps;
    j["max_boundary_occupation"] = max_boundary_occupation;
    j["boundary_contaminated"] = boundary_contaminated;
    j["warnings"] = warnings;
    j["wall_seconds"] = wall_seconds;
    j["steps"] = steps;
    j["converged"] = converged();
    return j.dump(2);
}

TebdTrajectory evolve_tebd(const TebdConfig& config, const ChainCoefficients& chain, const ProbeConfig& probe,
                           double alpha, double t_final) {
    config.validate();
    probe.validate();
    if (t_final < 0.0) throw std::invalid_argument("TEBD: t_final must be >= 0");
    if (chain.size() < config.n)
        throw std::invalid_argument("TEBD: chain has " + std::to_string(chain.size()) + " sites, config needs " +
                                    std::to_string(config.n));
    const auto start = std::chrono::steady_clock::now();
    ChainCoefficients used;
    used.omega.assign(chain.omega.begin(), chain.omega.begin() + config.n);
    used.kappa.assign(chain.kappa.begin(), chain.kappa.begin() + config.n);
    const TebdPropagator prop(chain_hamiltonian(used, probe), config);

    MpsState state = init_mps(alpha, config.n, config.d_max);
    TebdTrajectory out;
    auto& meta = out.metadata;
    out.trajectory.push(0.0, reduce_probe(state));

    const int per_sample = static_cast<int>(std::lround(config.sample_interval / config.dt));
    const int total = static_cast<int>(std::floor(t_final / config.dt + 1e-9));
    int done = 0;
    while (done < total) {
        const int k = std::min(per_sample, total - done);
        const TruncationStats st = prop.run(state, k);
        done += k;
        meta.total_discarded += st.discarded;
        meta.max_step_discarded = std::max(meta.max_step_discarded, st.max_step_discarded);
        meta.alarm_steps += st.alarm_steps;
        meta.max_bond = std::max(meta.max_bond, st.max_bond);

        const double occ = std::max(occupation(state, state.size() - 1), occupation(state, state.size() - 2));
        meta.max_boundary_occupation = std::max(meta.max_boundary_occupation, occ);
        const double t = done * config.dt;
        if (occ > config.boundary_threshold && !meta.boundary_contaminated) {
            meta.boundary_contaminated = true;
            std::ostringstream msg;
            msg << "boundary occupation " << occ << " at t = " << t << " exceeds " << config.boundary_threshold;
            meta.warnings.push_back(msg.str());
        }
        out.trajectory.push(t, reduce_probe(state));
    }
    meta.steps = done;
    if (meta.alarm_steps > 0) {
        std::ostringstream msg;
        msg << meta.alarm_steps << " steps discarded more than " << config.truncation_alarm
            << " (max " << meta.max_step_discarded << ")";
        meta.warnings.push_back(msg.str());
    }
    meta.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace qprobe
