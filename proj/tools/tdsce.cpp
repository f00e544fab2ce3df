#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tdsce/harness/experiments.hpp"
#include "tdsce/harness/output.hpp"
#include "tdsce/harness/selftest.hpp"

using namespace tdsce;

int main(int argc, char** argv) {
    CLI::App app{"TDS-OFDM sparse channel estimation simulator"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    std::string profiles_dir = default_profiles_dir().string();

    auto* sim = app.add_subcommand("simulate", "Run an experiment and write CSV results");
    std::string experiment, config_path, out_path = "results.csv", seed_arg;
    std::size_t trials = 0;
    unsigned threads = 0;
    sim->add_option("experiment", experiment, "recovery_vs_g | mse_vs_snr | ber_vs_snr | cir_snapshot")->required();
    sim->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
    sim->add_option("--seed", seed_arg, "Override the run seed (unsigned 64-bit)");
    sim->add_option("--trials", trials, "Override the trial count")->check(CLI::PositiveNumber);
    sim->add_option("--out", out_path, "CSV output path; a .meta sidecar is written next to it");
    sim->add_option("--threads", threads, "Worker threads (0 = all cores)");
    sim->add_option("--profiles", profiles_dir, "Directory of channel profile files");

    auto* prof = app.add_subcommand("profiles", "Channel profile utilities");
    auto* prof_list = prof->add_subcommand("list", "List available channel profiles");
    prof_list->add_option("--profiles", profiles_dir, "Directory of channel profile files");
    prof->require_subcommand(1);

    auto* self = app.add_subcommand("selftest", "Run the quick invariant suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            ExperimentConfig cfg = load_config(config_path);
            cfg.experiment = parse_experiment(experiment);
            cfg.seed = resolve_seed(cfg.seed, std::getenv("SIM_SEED"), seed_arg);
            if (trials) cfg.trials = trials;
            if (threads) cfg.threads = threads;
            cfg.validate();
            const Scenario sc = make_scenario(cfg, profiles_dir);
            const ExperimentResult r = run_experiment(sc);
            write_outputs(out_path, sc, r);
            std::cerr << "wrote " << out_path << " (" << r.points.size() << " points, config " << r.config_hash
                      << ", seed " << r.seed << ")\n";
            return 0;
        }
        if (*prof_list) {
            for (const auto& p : list_profiles(profiles_dir)) {
                const auto t = quantize_profile(p);
                std::cout << p.name << "\t" << (p.doppler.kind == DopplerKind::Static ? "static" : "jakes")
                          << "\tv=" << p.doppler.v_mps << "m/s\ttaps=" << t.delays.size()
                          << "\tL=" << t.length() << "\t" << p.source << "\n";
            }
            return 0;
        }
        if (*self) return run_selftest(std::cout) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
