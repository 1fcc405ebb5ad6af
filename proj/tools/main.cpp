#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

int main(int argc, char** argv) {
    using namespace qprobe::cli;

    CLI::App app{"qprobe: quantum probes of bosonic baths"};
    app.require_subcommand(1);
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir;
    int workers = -1;
    std::string verify_path;

    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name);
        if (name == "self-test") continue;
        sub->add_option("-c,--config", config_path, "JSON run configuration");
        sub->add_option("-s,--set", overrides, "override, e.g. bath.temperature=0.1")->take_all();
        sub->add_option("-o,--out", out_dir, "output directory");
        sub->add_option("-j,--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    }
    auto* verify = app.add_subcommand("verify", "re-hash a manifest and its files");
    verify->add_option("manifest", verify_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    }

    try {
        if (verify->parsed()) {
            const auto problems = verify_manifest(verify_path);
            for (const auto& p : problems) std::cerr << p << "\n";
            std::cout << (problems.empty() ? "manifest OK" : "manifest FAILED") << "\n";
            return problems.empty() ? kExitOk : kExitError;
        }
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "self-test") return self_test(std::cout) ? kExitOk : kExitError;

        RunConfig cfg = config_path.empty() ? load_config({}, overrides) : load_config(config_path, overrides);
        apply_environment(cfg.run);
        if (!out_dir.empty()) cfg.run.output = out_dir;
        if (workers > 0) cfg.run.workers = workers;
        const auto result = run_command(name, cfg, std::cerr);
        for (const auto& f : result.manifest.flags) std::cerr << "flag: " << f << "\n";
        std::cout << (cfg.run.output / ("manifest-" + name + ".json")).string() << "\n";
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
