// config.hpp: run configuration for the qprobe driver.
//
// A config is a JSON document with the sections bath, probe, qfi, backend,
// time, chain and run. Grids accept a number, an array, or
// {"start", "stop", "count"}; angles may be written as "pi/2", "3pi/4", ...
// Time grids also accept {"start", "stop", "step"}.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qprobe/qfi_series.hpp"

namespace qprobe::cli {

struct RunSettings {
    std::filesystem::path output = "qprobe-out";
    int workers = 0;              // 0: hardware concurrency
    std::filesystem::path cache_dir;  // empty: <output>/../.qprobe-cache
};

struct RunConfig {
    BathParameters bath;
    std::vector<double> thetas{kPi / 2};
    std::vector<double> alphas{0.0};
    std::vector<double> omegas{1.0};
    QfiConfig qfi;
    QfiMethod method = QfiMethod::Fidelity;
    Backend backend;
    std::vector<double> times{0.35};
    int chain_sites = 60;
    bool legendre_check = false;
    RunSettings run;

    void validate() const;

    // Normalized form of every result-affecting field; run settings excluded.
    nlohmann::json canonical() const;
    // SHA-256 of canonical().dump().
    std::string hash() const;
};

// "a.b.c=value"; value is parsed as JSON when possible, otherwise kept as a string.
void apply_override(nlohmann::json& doc, const std::string& assignment);

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides);

// Environment overrides: QPROBE_WORKERS, QPROBE_CACHE_DIR.
void apply_environment(RunSettings& run);
int resolved_workers(const RunSettings& run);
std::filesystem::path resolved_cache_dir(const RunSettings& run);

// "pi/2", "-3pi/4", "0.5pi", "2*pi/3" or a plain number.
double parse_angle(const std::string& text);

}  // namespace qprobe::cli
