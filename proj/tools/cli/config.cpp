#include "config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <stdexcept>
#include <thread>

#include "qprobe/content_hash.hpp"

namespace qprobe::cli {

namespace {

using nlohmann::json;

double number(const json& v, const std::string& what) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_angle(v.get<std::string>());
    throw std::invalid_argument("config: " + what + " must be a number");
}

std::vector<double> grid(const json& v, const std::string& what) {
    std::vector<double> out;
    if (v.is_array()) {
        for (const auto& x : v) out.push_back(number(x, what));
    } else if (v.is_object()) {
        const double a = number(v.at("start"), what), b = number(v.at("stop"), what);
        if (v.contains("count")) {
            const int n = v.at("count").get<int>();
            if (n < 1) throw std::invalid_argument("config: " + what + " count must be >= 1");
            for (int i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
        } else {
            const double h = number(v.at("step"), what);
            if (!(h > 0.0)) throw std::invalid_argument("config: " + what + " step must be > 0");
            const int n = static_cast<int>(std::floor((b - a) / h + 1e-9));
            for (int i = 0; i <= n; ++i) out.push_back(a + i * h);
        }
    } else {
        out.push_back(number(v, what));
    }
    if (out.empty()) throw std::invalid_argument("config: " + what + " grid is empty");
    return out;
}

const json& section(const json& doc, const char* name) {
    static const json empty = json::object();
    return doc.contains(name) ? doc.at(name) : empty;
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    return j.contains(key) ? j.at(key).get<T>() : fallback;
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> known) {
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::invalid_argument("config: unknown key " + where + "." + key);
    }
}

}  // namespace

double parse_angle(const std::string& text) {
    static const std::regex pi_form(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        double coeff = 1.0;
        if (m[1].length() > 0) coeff = (m[1] == "+" || m[1] == "-") ? (m[1] == "-" ? -1.0 : 1.0) : std::stod(m[1]);
        const double den = m[2].length() > 0 ? std::stod(m[2]) : 1.0;
        return coeff * kPi / den;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || text.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument("cannot parse number: " + text);
    return v;
}

void RunConfig::validate() const {
    qfi.validate();
    if (thetas.empty() || alphas.empty() || omegas.empty() || times.empty())
        throw std::invalid_argument("config: grids must be non-empty");
    for (double th : thetas) ProbeConfig::make(1.0, th).validate();
    for (double w : omegas) ProbeConfig::make(w, kPi / 2).validate();
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0) throw std::invalid_argument("config: times must be >= 0");
        if (i > 0 && !(times[i] > times[i - 1])) throw std::invalid_argument("config: times must increase");
    }
    if (chain_sites < 2) throw std::invalid_argument("config: chain.n must be >= 2");
    if (backend.kind == BackendKind::Tebd) {
        backend.tebd.validate();
        for (double t : times) {
            const double k = t / backend.tebd.sample_interval;
            if (std::abs(k - std::round(k)) > 1e-9 * std::max(1.0, k))
                throw std::invalid_argument("config: tebd times must be multiples of the sample interval");
        }
    }
}

nlohmann::json RunConfig::canonical() const {
    json j;
    j["bath"] = {{"lambda", bath.sd.coupling}, {"s", bath.sd.ohmicity}, {"omega_c", bath.sd.cutoff},
                 {"beta", bath.beta()}};
    j["probe"] = {{"theta", thetas}, {"alpha", alphas}, {"omega_s", omegas}};
    j["qfi"] = {{"eta", std::string(to_string(qfi.eta))},
                {"delta", qfi.delta},
                {"scheme", qfi.scheme == DifferenceScheme::Central ? "central" : "forward"},
                {"method", method == QfiMethod::Bloch ? "bloch" : "fidelity"}};
    json b = {{"kind", backend.kind == BackendKind::Dyson ? "dyson:" + std::to_string(backend.dyson_order)
                                                          : backend.label()}};
    if (backend.kind == BackendKind::Tebd) {
        const auto& t = backend.tebd;
        b["tebd"] = {{"dt", t.dt},
                     {"chi", t.chi},
                     {"sv_cutoff", t.sv_cutoff},
                     {"d_max", t.d_max},
                     {"n", t.n},
                     {"sample_interval", t.sample_interval},
                     {"truncation_alarm", t.truncation_alarm},
                     {"boundary_threshold", t.boundary_threshold}};
    }
    if (backend.kind == BackendKind::Tcl) {
        b["tcl"] = {{"rel_tol", backend.tcl.rel_tol}, {"abs_tol", backend.tcl.abs_tol}};
    }
    j["backend"] = b;
    j["chain"] = {{"n", chain_sites},
                  {"omega_max", backend.chain.support_max},
                  {"node_count", backend.chain.node_count},
                  {"legendre_check", legendre_check}};
    j["time"] = times;
    return j;
}

std::string RunConfig::hash() const { return sha256_hex(canonical().dump()); }

void apply_override(json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("override must be key=value: " + assignment);
    const std::string path = assignment.substr(0, eq), text = assignment.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;
    json* node = &doc;
    std::size_t start = 0;
    while (true) {
        const auto dot = path.find('.', start);
        const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (key.empty()) throw std::invalid_argument("override has an empty key: " + assignment);
        if (!node->is_object()) *node = json::object();
        node = &(*node)[key];
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    *node = value;
}

RunConfig parse_config(const json& doc) {
    reject_unknown(doc, "", {"bath", "probe", "qfi", "backend", "time", "chain", "run"});
    RunConfig c;

    const auto& bath = section(doc, "bath");
    reject_unknown(bath, "bath", {"lambda", "s", "omega_c", "temperature", "beta"});
    const auto sd = OhmicSpectralDensity::make(get_or(bath, "lambda", 1.0), get_or(bath, "s", 1.0),
                                               get_or(bath, "omega_c", 1.0));
    if (bath.contains("temperature") && bath.contains("beta"))
        throw std::invalid_argument("config: give bath.temperature or bath.beta, not both");
    const auto temp = bath.contains("beta") ? BathTemperature::from_beta(bath.at("beta").get<double>())
                                            : BathTemperature::from_temperature(get_or(bath, "temperature", 0.07));
    c.bath = {sd, temp};

    const auto& probe = section(doc, "probe");
    reject_unknown(probe, "probe", {"theta", "alpha", "omega_s"});
    if (probe.contains("theta")) c.thetas = grid(probe.at("theta"), "probe.theta");
    if (probe.contains("alpha")) c.alphas = grid(probe.at("alpha"), "probe.alpha");
    if (probe.contains("omega_s")) c.omegas = grid(probe.at("omega_s"), "probe.omega_s");

    const auto& qfi = section(doc, "qfi");
    reject_unknown(qfi, "qfi", {"eta", "delta", "scheme", "method"});
    c.qfi.eta = parse_env_parameter(get_or<std::string>(qfi, "eta", "beta"));
    c.qfi.delta = get_or(qfi, "delta", 1e-4);
    const auto scheme = get_or<std::string>(qfi, "scheme", "central");
    if (scheme != "central" && scheme != "forward") throw std::invalid_argument("config: qfi.scheme " + scheme);
    c.qfi.scheme = scheme == "central" ? DifferenceScheme::Central : DifferenceScheme::Forward;
    const auto method = get_or<std::string>(qfi, "method", "fidelity");
    if (method != "bloch" && method != "fidelity") throw std::invalid_argument("config: qfi.method " + method);
    c.method = method == "bloch" ? QfiMethod::Bloch : QfiMethod::Fidelity;

    const auto& backend = section(doc, "backend");
    reject_unknown(backend, "backend", {"kind", "tebd", "tcl"});
    c.backend = Backend::parse(get_or<std::string>(backend, "kind", "dyson:7"));
    if (backend.contains("tebd")) {
        if (c.backend.kind != BackendKind::Tebd) throw std::invalid_argument("config: backend.tebd needs kind tebd");
        const auto& t = backend.at("tebd");
        reject_unknown(t, "backend.tebd",
                       {"preset", "dt", "chi", "sv_cutoff", "d_max", "n", "sample_interval", "truncation_alarm",
                        "boundary_threshold"});
        const auto preset = get_or<std::string>(t, "preset", "desk");
        if (preset != "desk" && preset != "full") throw std::invalid_argument("config: unknown tebd preset " + preset);
        auto& tc = c.backend.tebd;
        tc = preset == "full" ? TebdConfig::full() : TebdConfig::desk();
        tc.dt = get_or(t, "dt", tc.dt);
        tc.chi = get_or(t, "chi", tc.chi);
        tc.sv_cutoff = get_or(t, "sv_cutoff", tc.sv_cutoff);
        tc.d_max = get_or(t, "d_max", tc.d_max);
        tc.n = get_or(t, "n", tc.n);
        tc.sample_interval = get_or(t, "sample_interval", tc.sample_interval);
        tc.truncation_alarm = get_or(t, "truncation_alarm", tc.truncation_alarm);
        tc.boundary_threshold = get_or(t, "boundary_threshold", tc.boundary_threshold);
    }
    if (backend.contains("tcl")) {
        if (c.backend.kind != BackendKind::Tcl) throw std::invalid_argument("config: backend.tcl needs kind tcl");
        const auto& t = backend.at("tcl");
        reject_unknown(t, "backend.tcl", {"rel_tol", "abs_tol"});
        c.backend.tcl.rel_tol = get_or(t, "rel_tol", c.backend.tcl.rel_tol);
        c.backend.tcl.abs_tol = get_or(t, "abs_tol", c.backend.tcl.abs_tol);
    }

    if (doc.contains("time")) c.times = grid(doc.at("time"), "time");

    const auto& chain = section(doc, "chain");
    reject_unknown(chain, "chain", {"n", "omega_max", "node_count", "legendre_check"});
    c.chain_sites = get_or(chain, "n", c.backend.kind == BackendKind::Tebd ? c.backend.tebd.n : 60);
    c.backend.chain.support_max = get_or(chain, "omega_max", 0.0);
    c.backend.chain.node_count = get_or(chain, "node_count", 0);
    c.legendre_check = get_or(chain, "legendre_check", false);

    const auto& run = section(doc, "run");
    reject_unknown(run, "run", {"output", "workers", "cache_dir"});
    c.run.output = get_or<std::string>(run, "output", c.run.output.string());
    c.run.workers = get_or(run, "workers", 0);
    c.run.cache_dir = get_or<std::string>(run, "cache_dir", "");

    c.validate();
    return c;
}

RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
    json doc = json::object();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read config " + path.string());
        doc = json::parse(in, nullptr, true, true);
    }
    for (const auto& o : overrides) apply_override(doc, o);
    return parse_config(doc);
}

void apply_environment(RunSettings& run) {
    if (const char* w = std::getenv("QPROBE_WORKERS"); w && *w) {
        std::size_t used = 0;
        const int n = std::stoi(w, &used);
        if (used != std::string(w).size() || n < 0) throw std::invalid_argument("QPROBE_WORKERS must be >= 0");
        run.workers = n;
    }
    if (const char* d = std::getenv("QPROBE_CACHE_DIR"); d && *d) run.cache_dir = d;
}

int resolved_workers(const RunSettings& run) {
    if (run.workers > 0) return run.workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::filesystem::path resolved_cache_dir(const RunSettings& run) {
    if (!run.cache_dir.empty()) return run.cache_dir;
    const auto parent = run.output.has_parent_path() ? run.output.parent_path() : std::filesystem::path(".");
    return parent / ".qprobe-cache";
}

}  // namespace qprobe::cli
