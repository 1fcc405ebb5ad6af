#include "qprobe/tcl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "qprobe/quadrature.hpp"

namespace qprobe {

ProbeConfig ProbeConfig::make(double omega_s, double theta) {
    ProbeConfig p{omega_s, theta};
    p.validate();
    return p;
}

void ProbeConfig::validate() const {
    if (!(omega_s >= 0.0) || !std::isfinite(omega_s)) throw std::invalid_argument("probe: omega_S must be >= 0");
    if (!(theta >= -1e-12 && theta <= kPi / 2 + 1e-12))
        throw std::invalid_argument("probe: theta must lie in [0, pi/2]");
}

Mat2 ProbeConfig::hamiltonian() const { return 0.5 * omega_s * pauli::z(); }

Mat2 ProbeConfig::interaction() const { return interaction_operator(theta); }

Mat2 interaction_operator(double theta) {
    return 0.5 * std::cos(theta) * pauli::x() + 0.5 * std::sin(theta) * pauli::z();
}

void TclCoefficients::check_symmetries(double tol) const {
    auto near = [tol](Complex a, Complex b) { return std::abs(a - b) <= tol * (1.0 + std::abs(a)); };
    bool ok = near(b_pm, std::conj(b_mp)) && near(b_zp, std::conj(b_pz)) && near(b_zm, std::conj(b_mz)) &&
              std::abs(b_zz.imag()) <= tol && std::abs(b_pp.imag()) <= tol && std::abs(b_mm.imag()) <= tol &&
              near(h01, std::conj(h10)) && std::abs(h00.imag()) <= tol && std::abs(h11.imag()) <= tol;
    if (!ok) throw std::logic_error("TCL coefficients violate Hermiticity relations");
}

Eigen::Matrix3cd TclCoefficients::dissipator_block() const {
    Eigen::Matrix3cd b;
    b << b_pp, b_pm, b_pz,
         b_mp, b_mm, b_mz,
         b_zp, b_zm, b_zz;
    return b;
}

Mat2 TclCoefficients::lamb_shift() const {
    Mat2 h;
    h << h00, h01, h10, h11;
    return h;
}

void Trajectory::push(double t, const DensityMatrix& rho) {
    if (!times.empty() && !(t > times.back())) throw std::invalid_argument("trajectory times must increase strictly");
    times.push_back(t);
    states.push_back(rho);
}

namespace tcl {

namespace {

quad::Options gamma_options() {
    quad::Options o;
    o.abs_tol = 1e-13;
    o.rel_tol = 1e-14;
    return o;
}

Complex integrate_gamma(const BathParameters& bath, double xi, double t0, double t1) {
    if (t1 == t0) return {0.0, 0.0};
    const double beta = bath.beta();
    auto f = [&](double tau) -> Complex {
        return std::exp(Complex(0.0, xi * tau)) * spectral::ttcf(bath.sd, beta, tau);
    };
    const int count = std::max(1, static_cast<int>(std::ceil((t1 - t0) / 0.5)));
    std::vector<double> pts;
    for (int i = 0; i <= count; ++i) pts.push_back(t0 + (t1 - t0) * i / count);
    try {
        return quad::integrate_panels(std::function<Complex(double)>(f), pts, gamma_options()).value;
    } catch (const ConvergenceError& e) {
        std::ostringstream msg;
        msg << "Gamma(" << xi << ", t) failed on [" << t0 << ", " << t1 << "]: " << e.what();
        throw ConvergenceError(msg.str(), e.achieved_error());
    }
}

const std::array<Mat2, 3>& jump_operators() {
    static const std::array<Mat2, 3> ops = {pauli::plus(), pauli::minus(), pauli::z()};
    return ops;
}

}  // namespace

Complex gamma(const BathParameters& bath, double xi, double t) {
    if (t < 0.0) throw std::invalid_argument("gamma: t must be >= 0");
    return integrate_gamma(bath, xi, 0.0, t);
}

GammaCache::GammaCache(BathParameters bath) : bath_(std::move(bath)) {}

Complex GammaCache::operator()(double xi, double t) {
    if (t < 0.0) throw std::invalid_argument("gamma: t must be >= 0");
    auto& points = checkpoints_[xi];
    if (points.empty()) points.emplace(0.0, Complex{0.0, 0.0});
    auto it = points.upper_bound(t);
    --it;  // largest checkpoint <= t
    if (it->first == t) return it->second;
    const Complex value = it->second + integrate_gamma(bath_, xi, it->first, t);
    points.emplace_hint(std::next(it), t, value);
    return value;
}

GammaTriplet GammaCache::triplet(double omega_s, double t) {
    return {(*this)(0.0, t), (*this)(omega_s, t), (*this)(-omega_s, t)};
}

std::size_t GammaCache::checkpoint_count() const {
    std::size_t n = 0;
    for (const auto& [xi, pts] : checkpoints_) n += pts.size();
    return n;
}

TclCoefficients coefficients(const ProbeConfig& probe, const GammaTriplet& g) {
    const double c = std::cos(probe.theta);
    const double s = std::sin(probe.theta);
    const double cc = c * c, ss = s * s, sc = s * c;
    const Complex i{0.0, 1.0};

    TclCoefficients k;
    k.b_zz = 0.5 * ss * g.zero.real();
    k.b_pp = 0.5 * cc * g.minus.real();
    k.b_mm = 0.5 * cc * g.plus.real();
    k.b_pm = 0.25 * cc * (g.minus + std::conj(g.plus));
    k.b_mp = std::conj(k.b_pm);
    k.b_zp = 0.25 * sc * (g.zero + std::conj(g.minus));
    k.b_pz = std::conj(k.b_zp);
    k.b_zm = 0.25 * sc * (g.zero + std::conj(g.plus));
    k.b_mz = std::conj(k.b_zm);
    // The upper diagonal entry carries Gamma(+omega_S); only H00 - H11 enters the dynamics.
    k.h00 = 0.25 * cc * g.plus.imag();
    k.h11 = 0.25 * cc * g.minus.imag();
    k.h10 = -i * 0.25 * sc * (g.zero.real() - 0.5 * (std::conj(g.minus) + g.plus));
    k.h01 = std::conj(k.h10);
    k.check_symmetries();
    return k;
}

TclCoefficients coefficients(const ProbeConfig& probe, const BathParameters& bath, double t) {
    if (t < 0.0) throw std::invalid_argument("tcl coefficients: t must be >= 0");
    const GammaTriplet g{gamma(bath, 0.0, t), gamma(bath, probe.omega_s, t), gamma(bath, -probe.omega_s, t)};
    return coefficients(probe, g);
}

Mat2 apply_generator(const TclCoefficients& c, const ProbeConfig& probe, const Mat2& rho) {
    const Complex i{0.0, 1.0};
    const Mat2 h = probe.hamiltonian() + c.lamb_shift();
    Mat2 out = -i * (h * rho - rho * h);
    const auto b = c.dissipator_block();
    const auto& ops = jump_operators();
    for (int k = 0; k < 3; ++k) {
        for (int j = 0; j < 3; ++j) {
            if (b(k, j) == 0.0) continue;
            const Mat2 sj_dag = ops[j].adjoint();
            const Mat2 prod = sj_dag * ops[k];
            out += b(k, j) * (ops[k] * rho * sj_dag - 0.5 * (prod * rho + rho * prod));
        }
    }
    return out;
}

Mat4 hamiltonian_matrix(double omega_s) {
    // d r_x/dt = -omega_S r_y,  d r_y/dt = omega_S r_x
    Mat4 m = Mat4::Zero();
    m(1, 2) = -omega_s;
    m(2, 1) = omega_s;
    return m;
}

Mat4 dissipator_matrix(const TclCoefficients& c) {
    const ProbeConfig free{0.0, 0.0};
    Mat4 m = matrix_of([&](const Mat2& x) { return apply_generator(c, free, x); });
    m.row(0).setZero();
    return m;
}

Mat4 generator_matrix(const TclCoefficients& c, const ProbeConfig& probe) {
    return hamiltonian_matrix(probe.omega_s) + dissipator_matrix(c);
}

}  // namespace tcl

namespace {

namespace odeint = boost::numeric::odeint;

template <std::size_t N>
using State = std::array<double, N>;

template <std::size_t N>
void integrate_linear(const ProbeConfig& probe, const BathParameters& bath, State<N>& x,
                      const std::vector<double>& t_grid, const TclOptions& opts,
                      const std::function<void(const State<N>&, double)>& observe) {
    if (t_grid.empty()) return;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] < 0.0 || (i > 0 && !(t_grid[i] > t_grid[i - 1])))
            throw std::invalid_argument("t_grid must be non-negative and strictly increasing");
    }
    tcl::GammaCache cache(bath);
    constexpr int cols = static_cast<int>(N / 4);
    auto rhs = [&](const State<N>& in, State<N>& out, double t) {
        const Mat4 g = tcl::generator_matrix(tcl::coefficients(probe, cache.triplet(probe.omega_s, t)), probe);
        Eigen::Map<const Eigen::Matrix<double, 4, cols>> xin(in.data());
        Eigen::Map<Eigen::Matrix<double, 4, cols>> xout(out.data());
        xout.noalias() = g * xin;
    };

    std::vector<double> times;
    const bool prepend_zero = t_grid.front() > 0.0;
    if (prepend_zero) times.push_back(0.0);
    times.insert(times.end(), t_grid.begin(), t_grid.end());
    if (times.size() == 1) {
        observe(x, times.front());
        return;
    }
    bool skip_first = prepend_zero;
    auto observer = [&](const State<N>& s, double t) {
        if (skip_first) {
            skip_first = false;
            return;
        }
        observe(s, t);
    };
    auto stepper = odeint::make_controlled(opts.abs_tol, opts.rel_tol, odeint::runge_kutta_dopri5<State<N>>());
    const double dt0 = std::min(opts.initial_step, times[1] - times[0]);
    try {
        odeint::integrate_times(stepper, rhs, x, times.begin(), times.end(), dt0, observer,
                                odeint::max_step_checker(1000000));
    } catch (const odeint::step_adjustment_error& e) {
        throw ConvergenceError(std::string("TCL integration: step-size underflow: ") + e.what(), 0.0);
    } catch (const odeint::no_progress_error& e) {
        throw ConvergenceError(std::string("TCL integration: no progress: ") + e.what(), 0.0);
    }
}

}  // namespace

Trajectory evolve_tcl(const ProbeConfig& probe, const BathParameters& bath, const DensityMatrix& rho0,
                      const std::vector<double>& t_grid, const TclOptions& opts) {
    probe.validate();
    const Vec4 r0 = extended_bloch(rho0.matrix());
    State<4> x{r0(0), r0(1), r0(2), r0(3)};
    Trajectory traj;
    bool warned = false;
    integrate_linear<4>(probe, bath, x, t_grid, opts, [&](const State<4>& s, double t) {
        const Vec4 r(1.0, s[1], s[2], s[3]);
        const double norm = r.tail<3>().norm();
        if (norm > 1.0 + opts.positivity_warning && !warned) {
            std::ostringstream msg;
            msg << "TCL2 positivity violation at t = " << t << ": |r| = " << norm;
            traj.warnings.push_back(msg.str());
            warned = true;
        }
        traj.push(t, DensityMatrix::unchecked(matrix_from_extended(r)));
    });
    return traj;
}

std::vector<SuperOp> evolve_tcl_map(const ProbeConfig& probe, const BathParameters& bath,
                                    const std::vector<double>& t_grid, const TclOptions& opts) {
    probe.validate();
    State<16> x{};
    for (int i = 0; i < 4; ++i) x[i * 4 + i] = 1.0;
    std::vector<SuperOp> maps;
    integrate_linear<16>(probe, bath, x, t_grid, opts, [&](const State<16>& s, double) {
        Mat4 d = Eigen::Map<const Mat4>(s.data());
        maps.emplace_back(d);
    });
    return maps;
}

}  // namespace qprobe
