#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "qprobe/chain_cache.hpp"
#include "qprobe/quadrature.hpp"
#include "workers.hpp"

namespace qprobe::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string tag(const char* f, double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Manifest new_manifest(const std::string& command, const RunConfig& cfg) {
    Manifest m;
    m.command = command;
    m.config = cfg.canonical();
    m.config_hash = cfg.hash();
    return m;
}

void describe(CsvTable& csv, const RunConfig& cfg) {
    csv.meta("config_hash", cfg.hash());
    csv.meta("lambda", cfg.bath.sd.coupling);
    csv.meta("s", cfg.bath.sd.ohmicity);
    csv.meta("omega_c", cfg.bath.sd.cutoff);
    csv.meta("beta", cfg.bath.beta());
}

// Grid point of the (theta, alpha, omega_S) product, theta slowest.
struct ProbePoint {
    double theta, alpha, omega_s;
    std::string name(const std::string& prefix, std::size_t index) const {
        return prefix + "_" + tag("%03.0f", static_cast<double>(index)) + "_theta" + tag("%.4g", theta) + "_alpha" +
               tag("%.4g", alpha) + "_omega" + tag("%.4g", omega_s);
    }
};

std::vector<ProbePoint> probe_points(const RunConfig& cfg) {
    std::vector<ProbePoint> out;
    for (double th : cfg.thetas)
        for (double al : cfg.alphas)
            for (double w : cfg.omegas) out.push_back({th, al, w});
    return out;
}

// Chain coefficients through the on-disk cache; one computation at a time.
class CachedChains {
public:
    explicit CachedChains(const RunConfig& cfg) : cache_(resolved_cache_dir(cfg.run)), opts_(cfg.backend.chain) {}

    ChainCoefficients operator()(const BathParameters& bath, int n) {
        std::lock_guard lock(mutex_);
        bool hit = false;
        auto c = cache_.get_or_compute(ChainKey::make(bath.sd, bath.beta(), n, opts_), &hit);
        (hit ? hits_ : misses_)++;
        return c;
    }
    int hits() const { return hits_; }
    int misses() const { return misses_; }

private:
    ChainCache cache_;
    chain::ChainOptions opts_;
    std::mutex mutex_;
    int hits_ = 0, misses_ = 0;
};

CsvTable trajectory_table(const Trajectory& traj) {
    CsvTable csv({"t", "re_rho00", "im_rho00", "re_rho01", "im_rho01", "re_rho10", "im_rho10", "re_rho11",
                  "im_rho11"});
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const Mat2& m = traj.states[i].matrix();
        csv.row({traj.times[i], m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag(), m(1, 0).real(),
                 m(1, 0).imag(), m(1, 1).real(), m(1, 1).imag()});
    }
    return csv;
}

int finish(Manifest& m, const RunConfig& cfg, Clock::time_point start) {
    m.timings["total"] = seconds_since(start);
    write_manifest(cfg.run.output, m);
    return m.converged() ? kExitOk : kExitUnconverged;
}

int cmd_correlation(const RunConfig& cfg, Manifest& m, std::ostream& log) {
    const auto start = Clock::now();
    const auto& sd = cfg.bath.sd;
    const double beta = cfg.bath.beta();
    CsvTable csv({"t", "re_C", "im_C", "re_C_quadrature", "im_C_quadrature"});
    describe(csv, cfg);
    csv.meta("evaluation", sd.integer_ohmicity() ? "polygamma closed form" : "quadrature");
    const auto moments = spectral::moments(cfg.bath, spectral::kMaxMomentOrder);
    for (int n = 0; n <= spectral::kMaxMomentOrder; ++n) csv.meta("zeta(" + std::to_string(n) + ")", moments.value[n]);
    for (double t : cfg.times) {
        const Complex c = spectral::ttcf(sd, beta, t);
        const Complex q = spectral::ttcf_quadrature(sd, beta, t);
        csv.row({t, c.real(), c.imag(), q.real(), q.imag()});
    }
    write_output(cfg.run.output, "correlation.csv", csv.str(), m);
    log << "correlation: " << cfg.times.size() << " rows, zeta(1) = " << format_double(moments.value[1]) << "\n";
    return finish(m, cfg, start);
}

int cmd_qfi_map(const RunConfig& cfg, Manifest& m, std::ostream& log) {
    const auto start = Clock::now();
    if (cfg.backend.kind == BackendKind::Tebd) throw std::invalid_argument("qfi-map needs backend dyson:k or tcl");
    struct Job {
        double omega_s, t;
    };
    std::vector<Job> jobs;
    for (double w : cfg.omegas)
        for (double t : cfg.times) jobs.push_back({w, t});
    const auto maps = parallel_map<QfiMap>(jobs.size(), resolved_workers(cfg.run), [&](std::size_t i) {
        return qfi_map(cfg.bath, jobs[i].omega_s, cfg.thetas, cfg.alphas, jobs[i].t, cfg.qfi, cfg.backend,
                       cfg.method);
    });
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& map = maps[i];
        CsvTable csv({"theta", "alpha", "Q", "R"});
        describe(csv, cfg);
        csv.meta("omega_s", jobs[i].omega_s);
        csv.meta("t", jobs[i].t);
        csv.meta("eta", std::string(to_string(cfg.qfi.eta)));
        csv.meta("backend", cfg.backend.label());
        csv.meta("reference", "theta = pi/2, alpha = 0");
        csv.meta("Q_reference", map.q_reference);
        csv.meta("loci_larger_R", "alpha = theta + pi/2, alpha = theta - pi/2");
        csv.meta("loci_smaller_R", "alpha = theta");
        for (const auto& c : map.cells) csv.row({c.theta, c.alpha, c.q, c.ratio});
        for (const auto& w : map.warnings) m.flags.push_back(w);
        write_output(cfg.run.output, "qfi_map_omega" + tag("%.4g", jobs[i].omega_s) + "_t" + tag("%.4g", jobs[i].t) +
                                         ".csv",
                     csv.str(), m);
    }
    log << "qfi-map: " << jobs.size() << " maps of " << cfg.thetas.size() << "x" << cfg.alphas.size() << "\n";
    return finish(m, cfg, start);
}

int cmd_qfi_series(const RunConfig& cfg, Manifest& m, std::ostream& log) {
    const auto start = Clock::now();
    const auto points = probe_points(cfg);
    CachedChains chains(cfg);
    const ChainProvider provider = [&](const BathParameters& b, int n) { return chains(b, n); };
    const auto results = parallel_map<QfiSeries>(points.size(), resolved_workers(cfg.run), [&](std::size_t i) {
        QfiRequest r;
        r.bath = cfg.bath;
        r.probe = ProbeConfig::make(points[i].omega_s, points[i].theta);
        r.alpha = points[i].alpha;
        r.times = cfg.times;
        r.qfi = cfg.qfi;
        r.backend = cfg.backend;
        r.method = cfg.method;
        return qfi_series(r, provider);
    });
    CsvTable all({"theta", "alpha", "omega_s", "t", "Q", "q"});
    describe(all, cfg);
    all.meta("eta", std::string(to_string(cfg.qfi.eta)));
    all.meta("backend", cfg.backend.label());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& s = results[i];
        const auto& p = points[i];
        CsvTable csv({"t", "Q", "q"});
        describe(csv, cfg);
        csv.meta("theta", p.theta);
        csv.meta("alpha", p.alpha);
        csv.meta("omega_s", p.omega_s);
        csv.meta("eta", std::string(to_string(cfg.qfi.eta)));
        csv.meta("delta", cfg.qfi.delta);
        csv.meta("backend", s.backend);
        csv.meta("converged", s.converged ? "true" : "false");
        for (const auto& smp : s.samples) {
            csv.row({smp.t, smp.q, smp.rate});
            all.row({p.theta, p.alpha, p.omega_s, smp.t, smp.q, smp.rate});
        }
        const std::string name = p.name("series", i);
        write_output(cfg.run.output, name + ".csv", csv.str(), m);
        if (s.tebd_lo) {
            nlohmann::json side;
            side["eta_lo"] = nlohmann::json::parse(s.tebd_lo->to_json());
            side["eta_hi"] = nlohmann::json::parse(s.tebd_hi->to_json());
            write_output(cfg.run.output, name + "_tebd.json", side.dump(2) + "\n", m);
        }
        for (const auto& w : s.warnings) m.flags.push_back(name + ": " + w);
        if (!s.converged && s.warnings.empty()) m.flags.push_back(name + ": not converged");
    }
    write_output(cfg.run.output, "qfi_series_all.csv", all.str(), m);
    if (cfg.backend.kind == BackendKind::Tebd)
        m.extra["chain_cache"] = {{"hits", chains.hits()}, {"misses", chains.misses()}};
    log << "qfi-series: " << points.size() << " series, " << m.flags.size() << " flags\n";
    return finish(m, cfg, start);
}

int cmd_chain(const RunConfig& cfg, Manifest& m, std::ostream& log) {
    const auto start = Clock::now();
    const ChainCache cache(resolved_cache_dir(cfg.run));
    const auto key = ChainKey::make(cfg.bath.sd, cfg.bath.beta(), cfg.chain_sites, cfg.backend.chain);
    bool hit = false;
    const auto c = cache.get_or_compute(key, &hit);
    write_output(cfg.run.output, "chain.csv", chain_csv(c, key), m);
    m.extra["cache_hit"] = hit;
    m.extra["cache_key"] = key.hash();
    m.extra["kappa0_squared"] = c.kappa[0] * c.kappa[0];
    m.extra["zeta0"] = spectral::moment(cfg.bath.sd, cfg.bath.beta(), 0);
    log << "chain: " << c.size() << " sites (" << (hit ? "cache hit" : "computed") << ")\n";
    if (cfg.legendre_check) {
        const bool ok = legendre_check(log);
        m.extra["legendre_check"] = ok ? "pass" : "fail";
        if (!ok) {
            finish(m, cfg, start);
            return kExitError;
        }
    }
    return finish(m, cfg, start);
}

int cmd_tcl_evolve(const RunConfig& cfg, Manifest& m, std::ostream& log) {
    const auto start = Clock::now();
    const auto points = probe_points(cfg);
    const auto trajs = parallel_map<Trajectory>(points.size(), resolved_workers(cfg.run), [&](std::size_t i) {
        return evolve_tcl(ProbeConfig::make(points[i].omega_s, points[i].theta), cfg.bath,
                          density_from_bloch(initial_state(points[i].alpha)), cfg.times, cfg.backend.tcl);
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto csv = trajectory_table(trajs[i]);
        describe(csv, cfg);
        csv.meta("theta", points[i].theta);
        csv.meta("alpha", points[i].alpha);
        csv.meta("omega_s", points[i].omega_s);
        csv.meta("backend", "tcl");
        const std::string name = points[i].name("trajectory", i);
        write_output(cfg.run.output, name + ".csv", csv.str(), m);
        for (const auto& w : trajs[i].warnings) m.flags.push_back(name + ": " + w);
    }
    log << "tcl-evolve: " << points.size() << " trajectories\n";
    return finish(m, cfg, start);
}

int cmd_tebd_evolve(const RunConfig& cfg, Manifest& m, std::ostream& log) {
    const auto start = Clock::now();
    const auto& tc = cfg.backend.tebd;
    const auto points = probe_points(cfg);
    CachedChains chains(cfg);
    const auto chain = chains(cfg.bath, tc.n);
    const auto runs = parallel_map<TebdTrajectory>(points.size(), resolved_workers(cfg.run), [&](std::size_t i) {
        return evolve_tebd(tc, chain, ProbeConfig::make(points[i].omega_s, points[i].theta), points[i].alpha,
                           cfg.times.back());
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
        // Keep the requested times only; they are multiples of the sample interval.
        Trajectory picked;
        const auto& full = runs[i].trajectory;
        std::size_t k = 0;
        for (double t : cfg.times) {
            while (k < full.size() && full.times[k] < t - 1e-9 * std::max(1.0, t)) ++k;
            if (k == full.size()) throw std::runtime_error("tebd-evolve: time " + format_double(t) + " not sampled");
            picked.push(full.times[k], full.states[k]);
        }
        auto csv = trajectory_table(picked);
        describe(csv, cfg);
        csv.meta("theta", points[i].theta);
        csv.meta("alpha", points[i].alpha);
        csv.meta("omega_s", points[i].omega_s);
        csv.meta("backend", "tebd");
        const std::string name = points[i].name("trajectory", i);
        write_output(cfg.run.output, name + ".csv", csv.str(), m);
        write_output(cfg.run.output, name + "_tebd.json", runs[i].metadata.to_json() + "\n", m);
        for (const auto& w : runs[i].metadata.warnings) m.flags.push_back(name + ": " + w);
    }
    log << "tebd-evolve: " << points.size() << " trajectories\n";
    return finish(m, cfg, start);
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"correlation", "qfi-map",    "qfi-series", "chain",
                                                "tcl-evolve",  "tebd-evolve", "self-test"};
    return names;
}

CommandResult run_command(const std::string& name, const RunConfig& cfg, std::ostream& log) {
    CommandResult r;
    r.manifest = new_manifest(name, cfg);
    using Fn = int (*)(const RunConfig&, Manifest&, std::ostream&);
    static const std::vector<std::pair<std::string, Fn>> table{
        {"correlation", cmd_correlation}, {"qfi-map", cmd_qfi_map},       {"qfi-series", cmd_qfi_series},
        {"chain", cmd_chain},             {"tcl-evolve", cmd_tcl_evolve}, {"tebd-evolve", cmd_tebd_evolve},
    };
    for (const auto& [n, fn] : table) {
        if (n == name) {
            r.exit_code = fn(cfg, r.manifest, log);
            return r;
        }
    }
    if (name == "self-test") {
        r.exit_code = self_test(log) ? kExitOk : kExitError;
        return r;
    }
    throw std::invalid_argument("unknown command " + name);
}

bool legendre_check(std::ostream& log) {
    const auto rule = quad::gauss_legendre(300);
    const auto rec = chain::recurrence_coefficients({1.0, rule.nodes, rule.weights}, 40);
    double worst = std::abs(rec.b[0] - 2.0);
    for (int n = 0; n < 40; ++n) {
        worst = std::max(worst, std::abs(rec.a[n]));
        if (n > 0) worst = std::max(worst, std::abs(rec.b[n] - n * n / (4.0 * n * n - 1.0)));
    }
    const bool ok = worst < 1e-10;
    log << (ok ? "PASS" : "FAIL") << " legendre recurrence (max error " << format_double(worst) << ")\n";
    return ok;
}

bool self_test(std::ostream& log) {
    bool all = true;
    auto check = [&](const std::string& what, const std::function<double()>& err, double tol) {
        double e;
        try {
            e = err();
        } catch (const std::exception& ex) {
            log << "FAIL " << what << " (" << ex.what() << ")\n";
            all = false;
            return;
        }
        const bool ok = e <= tol;
        all = all && ok;
        log << (ok ? "PASS " : "FAIL ") << what << " (" << format_double(e) << " <= " << tol << ")\n";
    };
    const BathParameters cold{OhmicSpectralDensity::make(1, 1, 1), BathTemperature::from_temperature(0.07)};
    check("zeta(1) = -2", [&] { return std::abs(spectral::moment(cold.sd, cold.beta(), 1) + 2.0); }, 1e-12);
    check("C(0) = zeta(0)", [&] {
        const double z0 = spectral::moment_quadrature(cold.sd, cold.beta(), 0);
        return std::abs(spectral::ttcf(cold.sd, cold.beta(), 0.0).real() - z0) / z0;
    }, 1e-8);
    all = legendre_check(log) && all;
    check("kappa_0^2 = zeta(0)", [&] {
        const auto c = chain::chain_coefficients(cold.sd, cold.beta(), 20);
        const double z0 = spectral::moment(cold.sd, cold.beta(), 0);
        return std::abs(c.kappa[0] * c.kappa[0] - z0) / z0;
    }, 1e-6);
    check("TCL2 exact for pure dephasing", [&] {
        const BathParameters b{OhmicSpectralDensity::make(0.1, 1, 1), cold.temperature};
        const auto rho0 = density_from_bloch(initial_state(0.0));
        const std::vector<double> ts{0.5, 1.0, 2.0};
        const auto traj = evolve_tcl(ProbeConfig::make(1.0, kPi / 2), b, rho0, ts);
        double e = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i)
            e = std::max(e, std::abs(std::abs(traj.states[i](0, 1)) -
                                     std::abs(dephasing_oracle(b, 1.0, rho0, ts[i])(0, 1))));
        return e;
    }, 1e-8);
    check("Dyson-7 tracks TCL2", [&] {
        const BathParameters b{OhmicSpectralDensity::make(1, 1, 1), BathTemperature::from_temperature(0.1)};
        const auto p = ProbeConfig::make(1.0, kPi / 4);
        const auto traj = evolve_tcl(p, b, density_from_bloch(initial_state(0.0)), {0.2});
        const Vec4 r = eval_poly(dyson::dyson_truncated(p, b, 7), 0.2).apply({1, 1, 0, 0});
        return (r.tail<3>() - bloch_from_density(traj.states[0]).vector()).norm();
    }, 1e-5);
    check("QFI Bloch vs fidelity", [&] {
        QfiRequest r;
        r.bath = cold;
        r.probe = ProbeConfig::make(1.0, 0.4);
        r.alpha = 1.1;
        r.times = {0.3};
        r.backend = Backend::parse("dyson:7");
        r.method = QfiMethod::Bloch;
        const double a = qfi_series(r).samples[0].q;
        r.method = QfiMethod::Fidelity;
        const double f = qfi_series(r).samples[0].q;
        return std::abs(a - f) / a;
    }, 1e-4);
    check("TEBD vs TCL2 at weak coupling", [&] {
        const BathParameters b{OhmicSpectralDensity::make(0.1, 1, 1), cold.temperature};
        auto cfg = TebdConfig::desk();
        cfg.n = 20;
        const auto p = ProbeConfig::make(1.0, kPi / 4);
        const auto tebd = evolve_tebd(cfg, chain::chain_coefficients(b.sd, b.beta(), cfg.n), p, 0.0, 0.2);
        const auto tcl = evolve_tcl(p, b, density_from_bloch(initial_state(0.0)), tebd.trajectory.times);
        double e = 0.0;
        for (std::size_t i = 0; i < tcl.size(); ++i)
            e = std::max(e, 1.0 - fidelity(tebd.trajectory.states[i], tcl.states[i]));
        return e;
    }, 1e-4);
    return all;
}

}  // namespace qprobe::cli
