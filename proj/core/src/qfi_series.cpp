#include "qprobe/qfi_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qprobe {

Backend Backend::parse(std::string_view text) {
    Backend b;
    if (text == "tcl") {
        b.kind = BackendKind::Tcl;
    } else if (text == "tebd") {
        b.kind = BackendKind::Tebd;
    } else if (text.substr(0, 6) == "dyson:" || text == "dyson") {
        b.kind = BackendKind::Dyson;
        if (text.size() > 6) {
            const std::string k(text.substr(6));
            std::size_t used = 0;
            int order = 0;
            try {
                order = std::stoi(k, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != k.size()) throw std::invalid_argument("backend: bad Dyson order '" + k + "'");
            b.dyson_order = order;
        }
        if (b.dyson_order < 2 || b.dyson_order > dyson::kMaxOrder)
            throw std::invalid_argument("backend: Dyson order must lie in [2, 7]");
    } else {
        throw std::invalid_argument("backend: expected tcl, dyson:<k> or tebd, got '" + std::string(text) + "'");
    }
    return b;
}

std::string Backend::label() const {
    switch (kind) {
        case BackendKind::Tcl: return "tcl";
        case BackendKind::Dyson: return "dyson-" + std::to_string(dyson_order);
        case BackendKind::Tebd: return "tebd";
    }
    return "?";
}

ChainProvider direct_chain_provider(const chain::ChainOptions& opts) {
    return [opts](const BathParameters& bath, int n) {
        return chain::chain_coefficients(bath.sd, bath.beta(), n, opts);
    };
}

namespace {

struct ShiftedPair {
    BathParameters lo, hi;
};

ShiftedPair shifted_pair(const BathParameters& bath, const QfiConfig& qfi) {
    qfi.validate();
    if (qfi.scheme == DifferenceScheme::Central)
        return {bath.shifted(qfi.eta, -0.5 * qfi.delta), bath.shifted(qfi.eta, 0.5 * qfi.delta)};
    return {bath, bath.shifted(qfi.eta, qfi.delta)};
}

double qfi_from_pair(const Vec4& lo, const Vec4& hi, double delta, QfiMethod method) {
    if (method == QfiMethod::Fidelity) return qfi_from_states(lo.tail<3>(), hi.tail<3>(), delta);
    return qfi_bloch(Vec4(0.5 * (lo + hi)), Vec4((hi - lo) / delta));
}

double rate_of(double q, double t) { return t > 0.0 ? q / t : std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

MapFamily map_family(const BathParameters& bath, const ProbeConfig& probe, const std::vector<double>& times,
                     const QfiConfig& qfi, const Backend& backend, QfiMethod method) {
    qfi.validate();
    MapFamily f;
    f.delta = qfi.delta;
    f.method = method;
    f.samples.resize(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) f.samples[i].t = times[i];

    if (backend.kind == BackendKind::Dyson && method == QfiMethod::Bloch) {
        const auto dd = dyson::dyson_with_derivative(probe, bath, backend.dyson_order, qfi.eta);
        for (auto& s : f.samples) {
            s.d = dd.map.polynomial()(s.t);
            s.d_dot = dd.derivative(s.t);
        }
        return f;
    }
    const ShiftedPair p = shifted_pair(bath, qfi);
    if (backend.kind == BackendKind::Dyson) {
        const auto lo = dyson::dyson_truncated(probe, p.lo, backend.dyson_order);
        const auto hi = dyson::dyson_truncated(probe, p.hi, backend.dyson_order);
        for (auto& s : f.samples) {
            s.d_lo = lo.polynomial()(s.t);
            s.d_hi = hi.polynomial()(s.t);
        }
    } else if (backend.kind == BackendKind::Tcl) {
        const auto lo = evolve_tcl_map(probe, p.lo, times, backend.tcl);
        const auto hi = evolve_tcl_map(probe, p.hi, times, backend.tcl);
        for (std::size_t i = 0; i < times.size(); ++i) {
            f.samples[i].d_lo = lo[i].matrix();
            f.samples[i].d_hi = hi[i].matrix();
        }
    } else {
        throw std::invalid_argument("map_family: TEBD does not produce dynamical maps");
    }
    for (auto& s : f.samples) {
        s.d = 0.5 * (s.d_lo + s.d_hi);
        s.d_dot = (s.d_hi - s.d_lo) / qfi.delta;
    }
    return f;
}

double qfi_from_maps(const MapSample& s, const MapFamily& f, double alpha) {
    const Vec4 r0 = initial_state(alpha).extended();
    if (f.method == QfiMethod::Bloch) return qfi_bloch(Vec4(s.d * r0), Vec4(s.d_dot * r0));
    return qfi_from_pair(Vec4(s.d_lo * r0), Vec4(s.d_hi * r0), f.delta, QfiMethod::Fidelity);
}

QfiSeries qfi_series(const QfiRequest& req, const ChainProvider& chains) {
    req.probe.validate();
    if (req.times.empty()) throw std::invalid_argument("qfi_series: empty time grid");
    QfiSeries out;
    out.theta = req.probe.theta;
    out.alpha = req.alpha;
    out.omega_s = req.probe.omega_s;
    out.bath = req.bath;
    out.eta = req.qfi.eta;
    out.backend = req.backend.label();

    if (req.backend.kind != BackendKind::Tebd) {
        const MapFamily f = map_family(req.bath, req.probe, req.times, req.qfi, req.backend, req.method);
        out.warnings = f.warnings;
        for (const auto& s : f.samples) {
            const double q = qfi_from_maps(s, f, req.alpha);
            out.samples.push_back({s.t, q, rate_of(q, s.t)});
        }
        return out;
    }

    const ChainProvider provider = chains ? chains : direct_chain_provider(req.backend.chain);
    const ShiftedPair p = shifted_pair(req.bath, req.qfi);
    const double t_final = *std::max_element(req.times.begin(), req.times.end());
    const auto& cfg = req.backend.tebd;
    const TebdTrajectory lo = evolve_tebd(cfg, provider(p.lo, cfg.n), req.probe, req.alpha, t_final);
    const TebdTrajectory hi = evolve_tebd(cfg, provider(p.hi, cfg.n), req.probe, req.alpha, t_final);
    out.tebd_lo = lo.metadata;
    out.tebd_hi = hi.metadata;
    for (const auto* m : {&lo.metadata, &hi.metadata}) {
        out.warnings.insert(out.warnings.end(), m->warnings.begin(), m->warnings.end());
        out.converged = out.converged && m->converged();
    }
    const auto& tl = lo.trajectory;
    const auto& th = hi.trajectory;
    for (double t : req.times) {
        const auto it = std::find_if(tl.times.begin(), tl.times.end(),
                                     [&](double s) { return std::abs(s - t) <= 1e-9 * std::max(1.0, t); });
        if (it == tl.times.end())
            throw std::invalid_argument("qfi_series: t = " + std::to_string(t) + " is not on the TEBD sample grid");
        const std::size_t i = static_cast<std::size_t>(it - tl.times.begin());
        const double q = qfi_from_pair(extended_bloch(tl.states[i].matrix()), extended_bloch(th.states[i].matrix()),
                                       req.qfi.delta, req.method);
        out.samples.push_back({tl.times[i], q, rate_of(q, tl.times[i])});
    }
    return out;
}

QfiMap qfi_map(const BathParameters& bath, double omega_s, const std::vector<double>& thetas,
               const std::vector<double>& alphas, double t, const QfiConfig& qfi, const Backend& backend,
               QfiMethod method) {
    if (thetas.empty() || alphas.empty()) throw std::invalid_argument("qfi_map: empty grid");
    QfiMap m;
    m.t = t;
    m.thetas = thetas;
    m.alphas = alphas;
    const std::vector<double> times{t};
    {
        const MapFamily ref = map_family(bath, ProbeConfig::make(omega_s, kPi / 2), times, qfi, backend, method);
        m.q_reference = qfi_from_maps(ref.samples[0], ref, 0.0);
        if (!(m.q_reference > 0.0))
            throw std::runtime_error("qfi_map: reference QFI (theta = pi/2, alpha = 0) is not positive");
    }
    for (double theta : thetas) {
        const MapFamily f = map_family(bath, ProbeConfig::make(omega_s, theta), times, qfi, backend, method);
        m.warnings.insert(m.warnings.end(), f.warnings.begin(), f.warnings.end());
        for (double alpha : alphas) {
            const double q = qfi_from_maps(f.samples[0], f, alpha);
            m.cells.push_back({theta, alpha, q, ratio_R(q, m.q_reference)});
        }
    }
    return m;
}

}  // namespace qprobe
