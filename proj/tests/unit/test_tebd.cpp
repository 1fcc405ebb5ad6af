#include <cmath>

#include "doctest.h"
#include "qprobe/chainmap.hpp"
#include "qprobe/mps.hpp"
#include "qprobe/qfi.hpp"
#include "qprobe/tcl.hpp"
#include "qprobe/tebd.hpp"
#include "../support/support.hpp"

using namespace qprobe;
using qprobe::test::bath_T;

namespace {

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
    MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

MatrixXc embed(const std::vector<MatrixXc>& ops) {
    MatrixXc out = ops[0];
    for (std::size_t i = 1; i < ops.size(); ++i) out = kron(out, ops[i]);
    return out;
}

// Dense probe + chain Hamiltonian with the probe as the leading tensor factor.
MatrixXc dense_hamiltonian(const ChainCoefficients& c, const ProbeConfig& p, int d) {
    const int n = c.size();
    MatrixXc a = MatrixXc::Zero(d, d);
    for (int k = 1; k < d; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    const MatrixXc id = MatrixXc::Identity(d, d);
    auto site_op = [&](int site, const MatrixXc& op) {
        std::vector<MatrixXc> ops{MatrixXc::Identity(2, 2)};
        for (int i = 1; i <= n; ++i) ops.push_back(i == site ? op : id);
        return embed(ops);
    };
    std::vector<MatrixXc> probe_ops{MatrixXc(p.hamiltonian())};
    for (int i = 1; i <= n; ++i) probe_ops.push_back(id);
    MatrixXc h = embed(probe_ops);
    std::vector<MatrixXc> coupling{MatrixXc(p.interaction())};
    for (int i = 1; i <= n; ++i) coupling.push_back(i == 1 ? MatrixXc(a + a.adjoint()) : id);
    h += c.kappa[0] * embed(coupling);
    for (int i = 1; i <= n; ++i) h += c.omega[i - 1] * site_op(i, a.adjoint() * a);
    for (int i = 1; i < n; ++i) {
        const MatrixXc hop = site_op(i, a) * site_op(i + 1, a.adjoint());
        h += c.kappa[i] * (hop + hop.adjoint());
    }
    return h;
}

Mat2 dense_reduced_probe(const VectorXc& psi) {
    const Eigen::Index rest = psi.size() / 2;
    Mat2 rho;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rho(i, j) = psi.segment(i * rest, rest).dot(psi.segment(j * rest, rest));
    // dot() conjugates its left argument: rho_ij = <psi_j|psi_i>.
    return rho.transpose().eval();
}

ChainCoefficients decoupled_chain(int n) {
    ChainCoefficients c;
    for (int i = 0; i < n; ++i) {
        c.omega.push_back(0.5 + 0.1 * i);
        c.kappa.push_back(i == 0 ? 0.0 : 0.3);
    }
    return c;
}

TebdConfig small_config(int n, int d, double dt) {
    TebdConfig cfg;
    cfg.n = n;
    cfg.d_max = d;
    cfg.dt = dt;
    cfg.chi = 64;
    cfg.sv_cutoff = 1e-14;
    cfg.sample_interval = 0.5;
    return cfg;
}

}  // namespace

TEST_SUITE("tebd") {

TEST_CASE("configuration validation") {
    CHECK_NOTHROW(TebdConfig::desk().validate());
    CHECK_NOTHROW(TebdConfig::full().validate());
    CHECK(TebdConfig::full().chi == 50);
    CHECK(TebdConfig::full().d_max == 12);
    CHECK(TebdConfig::full().n == 150);
    auto c = TebdConfig::desk();
    c.chi = 1;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = TebdConfig::desk();
    c.sample_interval = 0.015;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = TebdConfig::desk();
    c.dt = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("initial product states") {
    for (double alpha : {0.0, 0.4, kPi / 2, 2.0}) {
        auto s = init_mps(alpha, 5, 4);
        CHECK(s.size() == 6);
        CHECK(s.max_bond() == 1);
        const Vec3 r = bloch_from_density(reduce_probe(s)).vector();
        CHECK((r - Vec3(std::cos(alpha), 0, std::sin(alpha))).norm() < 1e-14);
    }
    auto s = init_mps(kPi / 2, 3, 4);
    CHECK(std::abs(reduce_probe(s)(0, 0) - 1.0) < 1e-15);
    CHECK(occupation(s, 2) == 0.0);
}

TEST_CASE("maximally entangled probe has a maximally mixed reduced state") {
    VectorXc a(2), b(2);
    a << 1, 0;
    b << 1, 0;
    auto s = MpsState::product({a, b});
    MatrixXc t0 = MatrixXc::Identity(2, 2) / std::sqrt(2.0);  // T(l=0, s, r) = delta_sr / sqrt 2
    MatrixXc t1 = MatrixXc::Zero(4, 1);                       // T(l, s, 0) = delta_ls, row l + 2 s
    t1(0, 0) = 1.0;
    t1(3, 0) = 1.0;
    s.set_site(0, t0);
    s.set_site(1, t1);
    s.set_center(0);
    CHECK(s.norm() == doctest::Approx(1.0));
    const auto rho = reduce_probe(s);
    CHECK((rho.matrix() - Mat2::Identity() / 2).norm() < 1e-15);
    s.move_center(1);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((reduce_probe(s).matrix() - Mat2::Identity() / 2).norm() < 1e-14);
    CHECK(occupation(s, 1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("bond Hamiltonians sum to the dense chain Hamiltonian") {
    const int n = 3, d = 3;
    ChainCoefficients c{{0.7, 1.1, 0.4}, {0.5, 0.3, 0.2}};
    const auto p = ProbeConfig::make(1.3, 0.6);
    const TebdPropagator prop(chain_hamiltonian(c, p), small_config(n, d, 0.01));
    // Assemble the bond terms on the dense space; the gate index is s_left + d_left s_right,
    // i.e. the right site is the leading factor of each two-site block.
    const std::vector<int> dims{2, d, d, d};
    MatrixXc total = MatrixXc::Zero(2 * d * d * d, 2 * d * d * d);
    for (int b = 0; b < n; ++b) {
        const MatrixXc& hb = prop.bond_hamiltonian(b);
        CHECK((hb - hb.adjoint()).norm() < 1e-14);
        // Permute hb from (right, left) ordering to (left, right) ordering.
        const int dl = dims[b], dr = dims[b + 1];
        MatrixXc lr(dl * dr, dl * dr);
        for (int sl = 0; sl < dl; ++sl)
            for (int sr = 0; sr < dr; ++sr)
                for (int tl = 0; tl < dl; ++tl)
                    for (int tr = 0; tr < dr; ++tr) lr(sl * dr + sr, tl * dr + tr) = hb(sl + dl * sr, tl + dl * tr);
        int before = 1, after = 1;
        for (int i = 0; i < b; ++i) before *= dims[i];
        for (int i = b + 2; i < n + 1; ++i) after *= dims[i];
        total += kron(kron(MatrixXc::Identity(before, before), lr), MatrixXc::Identity(after, after));
    }
    CHECK((total - dense_hamiltonian(c, p, d)).norm() < 1e-13);
}

TEST_CASE("TEBD reproduces exact dense evolution of a small system") {
    const int n = 3, d = 4;
    ChainCoefficients c{{0.9, 1.2, 0.8}, {0.6, 0.4, 0.3}};
    const auto p = ProbeConfig::make(1.0, 0.5);
    const double alpha = 0.3, t = 1.0;
    const auto traj = evolve_tebd(small_config(n, d, 0.005), c, p, alpha, t);

    const MatrixXc h = dense_hamiltonian(c, p, d);
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(h);
    VectorXc psi0 = VectorXc::Zero(h.rows());
    const double v = kPi / 2 - alpha;
    const Eigen::Index rest = h.rows() / 2;
    psi0(0) = std::cos(v / 2);
    psi0(rest) = std::sin(v / 2);
    const VectorXc phase = (es.eigenvalues().cast<Complex>() * Complex(0, -t)).array().exp();
    const VectorXc psi = es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint() * psi0;
    const Mat2 exact = dense_reduced_probe(psi);
    CHECK((traj.trajectory.states.back().matrix() - exact).norm() < 1e-4);
}

TEST_CASE("decoupled probe precesses freely") {
    auto cfg = small_config(6, 4, 0.01);
    cfg.sample_interval = 0.01;
    const auto traj = evolve_tebd(cfg, decoupled_chain(6), ProbeConfig::make(2.0, 0.4), 0.0, 1.0);
    REQUIRE(traj.trajectory.size() == 101);
    for (std::size_t i = 0; i < traj.trajectory.size(); ++i) {
        const double t = traj.trajectory.times[i];
        const Complex c01 = traj.trajectory.states[i](0, 1);
        CHECK(std::abs(std::abs(c01) - 0.5) < 1e-10);
        CHECK(std::abs(c01 - 0.5 * std::exp(Complex(0, -2.0 * t))) < 1e-10);
    }
}

TEST_CASE("second-order Trotter error") {
    const auto bath = bath_T(1, 1, 0.07);
    const auto chain = chain::chain_coefficients(bath.sd, bath.beta(), 8);
    const auto p = ProbeConfig::make(1.0, kPi / 4);
    auto final_state = [&](double dt) {
        return evolve_tebd(small_config(8, 5, dt), chain, p, 0.0, 1.0).trajectory.states.back().matrix();
    };
    const Mat2 r1 = final_state(0.1), r2 = final_state(0.05), r4 = final_state(0.025);
    const double ratio = (r1 - r2).norm() / (r2 - r4).norm();
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.125));
}

TEST_CASE("normalization and truncation bookkeeping") {
    const auto bath = bath_T(1, 1, 0.07);
    const auto chain = chain::chain_coefficients(bath.sd, bath.beta(), 10);
    auto cfg = small_config(10, 4, 0.05);
    cfg.chi = 4;
    const TebdPropagator prop(chain_hamiltonian(chain, ProbeConfig::make(1.0, 0.0)), cfg);
    auto state = init_mps(0.0, 10, 4);
    for (int k = 0; k < 20; ++k) {
        const auto st = prop.step(state);
        CHECK(st.discarded >= 0.0);
        CHECK(st.max_bond <= 4);
        CHECK(state.center() == 0);
        CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(state.max_bond() <= 4);
    }
    CHECK(state.discarded_weight() > 0.0);
}

TEST_CASE("zero-length run returns the initial state only") {
    const auto traj = evolve_tebd(small_config(4, 3, 0.01), decoupled_chain(4), ProbeConfig::make(1, 0.2), 0.7, 0.0);
    REQUIRE(traj.trajectory.size() == 1);
    CHECK(traj.trajectory.times[0] == 0.0);
    CHECK((bloch_from_density(traj.trajectory.states[0]).vector() - initial_state(0.7).vector()).norm() < 1e-14);
    CHECK(traj.metadata.steps == 0);
}

TEST_CASE("sampled states stay physical") {
    const auto bath = bath_T(1, 1, 0.07);
    const auto chain = chain::chain_coefficients(bath.sd, bath.beta(), 20);
    auto cfg = TebdConfig::desk();
    cfg.n = 20;
    const auto traj = evolve_tebd(cfg, chain, ProbeConfig::make(1.0, 0.3), 0.8, 1.5);
    for (const auto& s : traj.trajectory.states) {
        CHECK(std::abs(s.matrix().trace() - 1.0) < 1e-12);
        CHECK((s.matrix() - s.matrix().adjoint()).norm() < 1e-10);
        CHECK(extended_bloch(s.matrix()).tail<3>().norm() <= 1 + 1e-8);
    }
    CHECK(traj.metadata.max_bond <= cfg.chi);
    CHECK(traj.metadata.total_discarded >= 0.0);
}

TEST_CASE("weak coupling agrees with TCL2") {
    const auto bath = bath_T(0.1, 1, 0.07);
    const auto chain = chain::chain_coefficients(bath.sd, bath.beta(), 30);
    const auto p = ProbeConfig::make(1.0, kPi / 4);
    auto cfg = TebdConfig::desk();
    cfg.n = 30;
    const auto tebd = evolve_tebd(cfg, chain, p, 0.0, 0.4);
    const auto tcl = evolve_tcl(p, bath, density_from_bloch(initial_state(0.0)), tebd.trajectory.times);
    for (std::size_t i = 0; i < tebd.trajectory.size(); ++i)
        CHECK(fidelity(tebd.trajectory.states[i], tcl.states[i]) >= 1 - 1e-4);
}

TEST_CASE("boundary sentinel flags a too-short chain") {
    const auto bath = bath_T(1, 1, 0.07);
    const auto chain = chain::chain_coefficients(bath.sd, bath.beta(), 4);
    auto cfg = small_config(4, 4, 0.05);
    cfg.sample_interval = 0.1;
    const auto traj = evolve_tebd(cfg, chain, ProbeConfig::make(1.0, 0.0), 0.0, 2.0);
    CHECK(traj.metadata.boundary_contaminated);
    CHECK(traj.metadata.max_boundary_occupation > 1e-8);
    CHECK_FALSE(traj.metadata.converged());
    CHECK_FALSE(traj.metadata.warnings.empty());
}

TEST_CASE("truncation alarm") {
    const auto bath = bath_T(1, 1, 0.07);
    const auto chain = chain::chain_coefficients(bath.sd, bath.beta(), 12);
    auto cfg = small_config(12, 4, 0.05);
    cfg.chi = 2;
    cfg.sample_interval = 0.1;
    const auto traj = evolve_tebd(cfg, chain, ProbeConfig::make(1.0, 0.0), 0.0, 2.0);
    CHECK(traj.metadata.alarm_steps > 0);
    CHECK_FALSE(traj.metadata.converged());
    CHECK(traj.metadata.to_json().find("\"alarm_steps\"") != std::string::npos);
}

TEST_CASE("chain length and local dimension checks") {
    auto cfg = TebdConfig::desk();
    CHECK_THROWS_AS(evolve_tebd(cfg, decoupled_chain(10), ProbeConfig::make(1, 0.3), 0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(init_mps(0.0, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(init_mps(0.0, 3, 1), std::invalid_argument);
}

}  // TEST_SUITE
