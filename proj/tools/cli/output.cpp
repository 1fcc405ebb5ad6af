#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qprobe/content_hash.hpp"

namespace qprobe::cli {

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    const auto tmp = p.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << text;
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, p);
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);  // no "-0"
    return buf;
}

void CsvTable::row(const std::vector<double>& values) {
    if (values.size() != columns_.size()) throw std::logic_error("CSV row width differs from header");
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += ',';
        line += format_double(values[i]);
    }
    rows_.push_back(std::move(line));
}

std::string CsvTable::str() const {
    std::string out;
    for (const auto& [k, v] : meta_) out += "# " + k + ": " + v + "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + columns_[i];
    out += '\n';
    for (const auto& r : rows_) out += r + '\n';
    return out;
}

nlohmann::json Manifest::to_json(const std::filesystem::path& dir) const {
    nlohmann::json j;
    j["command"] = command;
    j["config_hash"] = config_hash;
    j["config"] = config;
    nlohmann::json files_json = nlohmann::json::array();
    for (const auto& f : files) files_json.push_back({{"path", f}, {"sha256", sha256_hex(read_file(dir / f))}});
    j["files"] = files_json;
    j["converged"] = converged();
    j["flags"] = flags;
    j["timings_seconds"] = timings;
    if (!extra.empty()) j["extra"] = extra;
    return j;
}

void write_output(const std::filesystem::path& dir, const std::string& name, const std::string& text,
                  Manifest& manifest) {
    std::filesystem::create_directories(dir);
    write_file(dir / name, text);
    manifest.files.push_back(name);
}

std::filesystem::path write_manifest(const std::filesystem::path& dir, const Manifest& manifest) {
    std::filesystem::create_directories(dir);
    const auto path = dir / ("manifest-" + manifest.command + ".json");
    write_file(path, manifest.to_json(dir).dump(2) + "\n");
    return path;
}

std::vector<std::string> verify_manifest(const std::filesystem::path& manifest_path) {
    const auto j = nlohmann::json::parse(read_file(manifest_path));
    std::vector<std::string> problems;
    if (sha256_hex(j.at("config").dump()) != j.at("config_hash").get<std::string>())
        problems.push_back("config hash does not match the stored config");
    const auto dir = manifest_path.parent_path();
    for (const auto& f : j.at("files")) {
        const auto p = dir / f.at("path").get<std::string>();
        if (!std::filesystem::exists(p)) {
            problems.push_back("missing file " + p.string());
        } else if (sha256_hex(read_file(p)) != f.at("sha256").get<std::string>()) {
            problems.push_back("file changed: " + p.string());
        }
    }
    return problems;
}

}  // namespace qprobe::cli
