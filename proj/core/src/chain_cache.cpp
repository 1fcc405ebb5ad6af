#include "qprobe/chain_cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qprobe/content_hash.hpp"

namespace qprobe {

namespace {

std::string format17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

ChainKey ChainKey::make(const OhmicSpectralDensity& sd, double beta, int n, const chain::ChainOptions& opts) {
    ChainKey k;
    k.sd = sd;
    k.beta = beta;
    k.n = n;
    k.support_max = opts.support_max > 0.0 ? opts.support_max : chain::default_support_max(sd, beta);
    k.node_count = opts.node_count > 0 ? opts.node_count : 20 * n;
    return k;
}

std::string ChainKey::canonical() const {
    std::ostringstream s;
    s << "chain-v1;lambda=" << canonical_number(sd.coupling) << ";s=" << canonical_number(sd.ohmicity)
      << ";omega_c=" << canonical_number(sd.cutoff) << ";beta=" << canonical_number(beta)
      << ";omega_max=" << canonical_number(support_max) << ";nodes=" << node_count << ";N=" << n;
    return s.str();
}

std::string ChainKey::hash() const { return sha256_hex(canonical()); }

std::string chain_csv(const ChainCoefficients& c, const ChainKey& key) {
    std::ostringstream s;
    s << "# key: " << key.canonical() << "\n";
    s << "# hash: " << key.hash() << "\n";
    s << "# kappa0_squared: " << format17(c.kappa.empty() ? 0.0 : c.kappa[0] * c.kappa[0]) << "\n";
    s << "n,omega_n,kappa_n\n";
    for (int i = 0; i < c.size(); ++i) s << i << "," << format17(c.omega[i]) << "," << format17(c.kappa[i]) << "\n";
    return s.str();
}

ChainCoefficients parse_chain_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ChainCoefficients c;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line != "n,omega_n,kappa_n") throw std::runtime_error("chain CSV: unexpected header");
            header = true;
            continue;
        }
        std::istringstream row(line);
        std::string f0, f1, f2;
        if (!std::getline(row, f0, ',') || !std::getline(row, f1, ',') || !std::getline(row, f2))
            throw std::runtime_error("chain CSV: malformed row");
        if (std::stoi(f0) != c.size()) throw std::runtime_error("chain CSV: rows out of order");
        c.omega.push_back(std::stod(f1));
        c.kappa.push_back(std::stod(f2));
    }
    if (!header || c.size() == 0) throw std::runtime_error("chain CSV: no data");
    return c;
}

ChainCache::ChainCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ChainCache::path_for(const ChainKey& key) const {
    return dir_ / ("chain-" + key.hash() + ".csv");
}

std::optional<ChainCoefficients> ChainCache::load(const ChainKey& key) const {
    const auto p = path_for(key);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (text.find("# hash: " + key.hash()) == std::string::npos) return std::nullopt;
    try {
        ChainCoefficients c = parse_chain_csv(text);
        if (c.size() != key.n) return std::nullopt;
        return c;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ChainCache::store(const ChainKey& key, const ChainCoefficients& c) const {
    std::filesystem::create_directories(dir_);
    const auto final_path = path_for(key);
    auto tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("chain cache: cannot write " + tmp.string());
        out << chain_csv(c, key);
        if (!out) throw std::runtime_error("chain cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path);
}

ChainCoefficients ChainCache::get_or_compute(const ChainKey& key, bool* hit) const {
    if (auto c = load(key)) {
        if (hit) *hit = true;
        return *c;
    }
    ChainCoefficients c = chain::chain_coefficients(key.sd, key.beta, key.n, {key.support_max, key.node_count});
    store(key, c);
    if (hit) *hit = false;
    return c;
}

}  // namespace qprobe
