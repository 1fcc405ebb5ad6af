// chain_cache.hpp: on-disk cache of chain coefficients keyed by a content hash
// of (lambda, s, omega_c, beta, omega_max, node_count, N).

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qprobe/chainmap.hpp"

namespace qprobe {

struct ChainKey {
    OhmicSpectralDensity sd;
    double beta = 1.0;
    double support_max = 0.0;  // resolved value, never 0
    int node_count = 0;        // resolved value, never 0
    int n = 0;

    // Resolves the defaults of chain::ChainOptions.
    static ChainKey make(const OhmicSpectralDensity& sd, double beta, int n, const chain::ChainOptions& opts = {});

    std::string canonical() const;
    std::string hash() const;
};

// CSV rows "n,omega_n,kappa_n" with 17 significant digits; a comment header
// carries the key and kappa_0^2.
std::string chain_csv(const ChainCoefficients& c, const ChainKey& key);
ChainCoefficients parse_chain_csv(const std::string& text);

class ChainCache {
public:
    explicit ChainCache(std::filesystem::path dir);

    const std::filesystem::path& directory() const { return dir_; }
    std::filesystem::path path_for(const ChainKey& key) const;

    std::optional<ChainCoefficients> load(const ChainKey& key) const;
    // Writes through a temporary file and renames it into place.
    void store(const ChainKey& key, const ChainCoefficients& c) const;

    // Loads the entry or computes and stores it; hit reports which happened.
    ChainCoefficients get_or_compute(const ChainKey& key, bool* hit = nullptr) const;

private:
    std::filesystem::path dir_;
};

}  // namespace qprobe
