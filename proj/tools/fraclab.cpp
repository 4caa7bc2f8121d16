#include "frac/common.hpp"
#include "frac/xlab.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>

namespace {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const frac::config_error*>(&e)) return 2;
    if (dynamic_cast<const frac::resolution_error*>(&e)) return 3;
    if (dynamic_cast<const frac::band_range_error*>(&e)) return 3;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic fractional-derivative lab"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the built-in check suite");
    std::string module;
    bool fast = false;
    verify->add_option("--module", module, "only checks of one module");
    verify->add_flag("--fast", fast, "identities and oracles only");

    auto* sweep = app.add_subcommand("sweep", "run one experiment config");
    std::string cfg_path;
    std::string out_dir = "runs";
    int grid_n = 0;
    std::uint64_t seed_override = 0;
    sweep->add_option("config", cfg_path, "experiment json file")->required();
    sweep->add_option("--out", out_dir, "output directory");
    sweep->add_option("--grid-n", grid_n, "override grid.n");
    auto* seed_opt = sweep->add_option("--seed", seed_override, "override the base seed");

    auto* report = app.add_subcommand("report", "summarize a directory of sweep runs");
    std::string rep_dir;
    report->add_option("dir", rep_dir, "directory holding csv runs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            auto outcomes = frac::run_verify(module, fast);
            if (outcomes.empty()) {
                std::fprintf(stderr, "no checks matched module '%s'\n", module.c_str());
                return 2;
            }
            int failed = 0;
            for (const auto& oc : outcomes) {
                if (oc.pass) {
                    std::printf("[PASS] %s/%s (%.0f ms)\n", oc.module.c_str(),
                                oc.name.c_str(), oc.wall_ms);
                } else {
                    ++failed;
                    std::printf("[FAIL] %s/%s: %s\n", oc.module.c_str(), oc.name.c_str(),
                                oc.detail.c_str());
                }
            }
            std::printf("%d/%zu checks passed\n",
                        static_cast<int>(outcomes.size()) - failed, outcomes.size());
            return failed ? 1 : 0;
        }
        if (sweep->parsed()) {
            frac::ProbeConfig cfg = frac::load_probe_config(cfg_path);
            if (grid_n > 0) cfg.grid.n = grid_n;
            if (seed_opt->count() > 0) cfg.seed = seed_override;
            auto recs = frac::run_probe(cfg);
            std::string stem = std::filesystem::path(cfg_path).stem().string();
            frac::write_run_outputs(recs, out_dir, stem);
            std::printf("wrote %zu records to %s/%s.{csv,json,svg}\n", recs.size(),
                        out_dir.c_str(), stem.c_str());
            return 0;
        }
        if (report->parsed()) {
            int nfiles = frac::report_dir(rep_dir, std::cout);
            std::printf("summarized %d run file%s under %s\n", nfiles,
                        nfiles == 1 ? "" : "s", rep_dir.c_str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    }
    return 0;
}
