#include <CLI11.hpp>
#include <cstdint>
#include <iostream>

#include "qelm/config.hpp"
#include "qelm/results.hpp"
#include "qelm/runner.hpp"

namespace {

struct RunArgs {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 0;
};

int do_run(const RunArgs& args, bool rank_only) {
    qelm::ExperimentConfig cfg = qelm::load_config(args.config_path);
    if (args.seed_set) cfg.master_seed = args.seed;

    if (rank_only && cfg.experiment != qelm::ExperimentKind::RankVsDetectors &&
        cfg.experiment != qelm::ExperimentKind::RankVsPhotons) {
        std::cerr << "qelm rank: config requests experiment '" << qelm::to_string(cfg.experiment)
                  << "', expected rank_vs_detectors or rank_vs_photons\n";
        return 2;
    }

    const auto errors = qelm::validate_config(cfg);
    if (!errors.empty()) {
        std::cerr << "config invalid:\n";
        for (const auto& e : errors) std::cerr << "  " << e << '\n';
        return 2;
    }

    const int jobs = qelm::resolve_jobs(cfg, args.jobs);
    const qelm::ResultRecord record = qelm::run_experiment(cfg, jobs);
    const std::string dir = args.out_dir.empty() ? cfg.output : args.out_dir;
    qelm::write_results(record, dir);
    std::cout << qelm::to_string(cfg.experiment) << ": " << record.rows.size() << " rows in "
              << qelm::format_double(record.wall_clock_sec) << " s -> " << dir
              << "/table.csv\n";
    return 0;
}

int do_validate(const std::string& config_path) {
    const qelm::ExperimentConfig cfg = qelm::load_config(config_path);
    const auto errors = qelm::validate_config(cfg);
    if (errors.empty()) {
        std::cout << "ok: " << qelm::to_string(cfg.experiment) << '\n';
        return 0;
    }
    std::cerr << "config invalid:\n";
    for (const auto& e : errors) std::cerr << "  " << e << '\n';
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qelm: photonic coincidence extreme-learning-machine simulator"};
    app.require_subcommand(1);

    RunArgs run_args, rank_args;
    std::string validate_config_path;

    auto add_run_flags = [](CLI::App* cmd, RunArgs& args) {
        cmd->add_option("--config", args.config_path, "experiment config (JSON)")->required();
        cmd->add_option("--out", args.out_dir, "output directory (default: config's output)");
        auto* seed = cmd->add_option("--seed", args.seed, "override the master seed");
        cmd->add_option("--jobs", args.jobs, "worker count (default: config, then QELM_JOBS)");
        cmd->parse_complete_callback([seed, &args] { args.seed_set = seed->count() > 0; });
    };

    auto* run_cmd = app.add_subcommand("run", "run any configured experiment");
    add_run_flags(run_cmd, run_args);
    auto* rank_cmd = app.add_subcommand("rank", "run a rank-scaling experiment");
    add_run_flags(rank_cmd, rank_args);
    auto* validate_cmd = app.add_subcommand("validate", "check a config without running it");
    validate_cmd->add_option("--config", validate_config_path, "experiment config (JSON)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return do_run(run_args, false);
        if (rank_cmd->parsed()) return do_run(rank_args, true);
        return do_validate(validate_config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
