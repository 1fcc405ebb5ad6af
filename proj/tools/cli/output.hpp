// output.hpp: CSV files with a comment header, and run manifests.

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace qprobe::cli {

// %.17g
std::string format_double(double x);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    // "# key: value" line above the column header.
    void meta(const std::string& key, const std::string& value) { meta_.emplace_back(key, value); }
    void meta(const std::string& key, double value) { meta(key, format_double(value)); }
    void row(const std::vector<double>& values);

    std::string str() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::string> rows_;
};

struct Manifest {
    std::string command;
    nlohmann::json config;  // canonical config
    std::string config_hash;
    std::vector<std::string> files;  // relative to the output directory
    std::vector<std::string> flags;  // convergence and other warnings
    std::map<std::string, double> timings;
    nlohmann::json extra = nlohmann::json::object();

    bool converged() const { return flags.empty(); }
    nlohmann::json to_json(const std::filesystem::path& dir) const;
};

// Writes text to dir/name and records it in the manifest.
void write_output(const std::filesystem::path& dir, const std::string& name, const std::string& text,
                  Manifest& manifest);

// dir/manifest-<command>.json
std::filesystem::path write_manifest(const std::filesystem::path& dir, const Manifest& manifest);

// Re-hashes the stored config and every listed file; returns the problems found.
std::vector<std::string> verify_manifest(const std::filesystem::path& manifest_path);

}  // namespace qprobe::cli
