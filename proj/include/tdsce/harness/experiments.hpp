#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <optional>

#include "tdsce/harness/trial.hpp"
#include "tdsce/numerics/select.hpp"

namespace tdsce {

struct EstimatorOutcome {
    std::string estimator;
    double mse = 1.0;  // for "crlb" this is the bound itself
    bool failed = false;
    bool under_observed = false;
    std::uint64_t mults = 0;
    int iterations = 0;
    std::uint64_t bit_errors = 0;
    std::size_t G_hat = 0;
    std::size_t S = 0;
    Support support;
    CVec dense;  // length M
};

/// Runs every configured estimator on one trial. forced_L_hat pins L_hat (and G_hat) for all of them.
std::vector<EstimatorOutcome> evaluate_trial(const Scenario& sc, const TrialSignals& ts, double snr_db,
                                             std::optional<std::size_t> forced_L_hat = std::nullopt);

/// Aggregate over trials for one (estimator, SNR, G) point.
struct PointStats {
    std::string estimator;
    double snr_db = 0.0;
    long g = -1;  // forced G, -1 when adaptive
    std::size_t trials = 0;
    std::size_t recovered = 0;
    std::size_t failures = 0;
    std::size_t under_observed = 0;
    double mse_sum = 0.0;
    double mults_sum = 0.0;
    double iters_sum = 0.0;
    double g_hat_sum = 0.0;
    std::uint64_t bits_total = 0;
    std::uint64_t bits_errored = 0;

    double mean_mse() const { return trials ? mse_sum / static_cast<double>(trials) : 0.0; }
    double recovery() const { return trials ? static_cast<double>(recovered) / static_cast<double>(trials) : 0.0; }
    double ber() const { return bits_total ? static_cast<double>(bits_errored) / static_cast<double>(bits_total) : 0.0; }
};

struct SnapshotRow {
    std::string estimator;
    std::size_t tap = 0;
    cplx gain;
};

struct ExperimentResult {
    ExperimentKind kind = ExperimentKind::MseVsSnr;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string profile;
    std::vector<PointStats> points;
    std::vector<SnapshotRow> snapshot;
    double snapshot_snr_db = 0.0;

    const PointStats* find(const std::string& estimator, double snr_db, long g = -1) const;
};

/// Runs fn(trial) for trial in [0, n) on up to `threads` workers; results are returned in trial order.
template <typename T>
std::vector<T> run_trials(std::size_t n, unsigned threads, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    unsigned workers = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t t = 0; t < n; ++t) out[t] = fn(t);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t t = next++; t < n; t = next++) out[t] = fn(t);
            } catch (...) {
                errors[w] = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}



ExperimentResult run_recovery_vs_g(const Scenario& sc);
ExperimentResult run_mse_vs_snr(const Scenario& sc);
ExperimentResult run_ber_vs_snr(const Scenario& sc);
ExperimentResult run_cir_snapshot(const Scenario& sc);
ExperimentResult run_experiment(const Scenario& sc);

}  // namespace tdsce
