#include "tdsce/harness/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "tdsce/estimator/dpn.hpp"
#include "tdsce/estimator/pipeline.hpp"
#include "tdsce/harness/metrics.hpp"

namespace tdsce {

const PointStats* ExperimentResult::find(const std::string& estimator, double snr_db, long g) const {
    for (const auto& p : points)
        if (p.estimator == estimator && p.snr_db == snr_db && p.g == g) return &p;
    return nullptr;
}

namespace {

EstimatorOutcome failed_outcome(const std::string& name, std::size_t M) {
    EstimatorOutcome o;
    o.estimator = name;
    o.failed = true;
    o.mse = 1.0;
    o.dense.assign(M, cplx(0.0, 0.0));
    return o;
}

EstimatorOutcome from_estimate(const std::string& name, const ChannelEstimate& e, const CVec& truth) {
    EstimatorOutcome o;
    o.estimator = name;
    o.dense = e.dense;
    o.support = e.support;
    o.mse = mse(e.dense, truth);
    o.failed = e.status == EstimateStatus::Failed;
    o.under_observed = e.under_observed;
    o.mults = e.ops.mults;
    o.iterations = e.iterations_used;
    return o;
}

bool wants(const Scenario& sc, const char* name) {
    return std::find(sc.cfg.estimators.begin(), sc.cfg.estimators.end(), name) != sc.cfg.estimators.end();
}

void accumulate(PointStats& p, const EstimatorOutcome& o) {
    p.trials += 1;
    p.mse_sum += o.mse;
    p.recovered += (!o.failed && recovered(o.mse)) ? 1 : 0;
    p.failures += o.failed ? 1 : 0;
    p.under_observed += o.under_observed ? 1 : 0;
    p.mults_sum += static_cast<double>(o.mults);
    p.iters_sum += o.iterations;
    p.g_hat_sum += static_cast<double>(o.G_hat);
}

}  // namespace

std::vector<EstimatorOutcome> evaluate_trial(const Scenario& sc, const TrialSignals& ts, double snr_db,
                                             std::optional<std::size_t> forced_L_hat) {
    const std::size_t M = sc.single.M;
    CoarseSettings coarse = sc.cfg.coarse;
    coarse.b = sc.cfg.b_for(snr_db);
    const bool need_run = wants(sc, "pa_iht") || wants(sc, "iht") || wants(sc, "cosamp") || wants(sc, "crlb");

    std::optional<PaIhtRun> run;
    if (need_run && ts.rx) {
        try {
            run = run_pa_iht(*ts.rx, sc.chips, sc.params, sc.i, coarse, sc.cfg.pa_iht, forced_L_hat);
        } catch (const Error&) {
            run.reset();
        }
    }

    std::vector<EstimatorOutcome> out;
    for (const auto& name : sc.cfg.estimators) {
        EstimatorOutcome o = failed_outcome(name, M);
        try {
            if (name == "pa_iht" && run) {
                o = from_estimate(name, run->refined, ts.truth_dense);
            } else if (name == "iht" && run) {
                IhtOptions opt;
                opt.max_iters = sc.cfg.iht_max_iters;
                o = from_estimate(name, iht_classic(*run->meas, run->priors.S, M, opt), ts.truth_dense);
            } else if (name == "cosamp" && run) {
                CosampOptions opt;
                opt.max_iters = sc.cfg.cosamp_max_iters;
                o = from_estimate(name, cosamp(*run->meas, run->priors.S, M, std::nullopt, opt), ts.truth_dense);
            } else if (name == "crlb" && run) {
                o.failed = false;
                o.mse = crlb(static_cast<double>(run->priors.S), static_cast<double>(run->priors.G_hat),
                             sc.params.R_g2, std::pow(10.0, snr_db / 10.0));
            } else if (name == "mcosamp" && ts.rx) {
                const McosampRun m = run_mcosamp(*ts.rx, sc.chips, sc.i, coarse, forced_L_hat);
                o = from_estimate(name, m.estimate, ts.truth_dense);
                o.G_hat = m.priors.G_hat;
                o.S = m.priors.S;
            } else if (name == "dpn" && ts.rx_dual) {
                const DpnEstimate d = dpn_estimate(*ts.rx_dual, sc.chips, sc.i, sc.cfg.dpn_R, coarse.threshold);
                o = from_estimate(name, d.taps, ts.truth_dense);
                o.dense = d.raw;
                o.mse = mse(d.raw, ts.truth_dense);
            }
        } catch (const Error&) {
            o = failed_outcome(name, M);
        }
        if (run && name != "mcosamp" && name != "dpn") {
            o.G_hat = run->priors.G_hat;
            o.S = run->priors.S;
        }
        out.push_back(std::move(o));
    }
    return out;
}

namespace {

ExperimentResult base_result(const Scenario& sc) {
    ExperimentResult r;
    r.kind = sc.cfg.experiment;
    r.config_hash = config_hash(sc.cfg);
    r.seed = sc.cfg.seed;
    r.profile = sc.cfg.profile;
    return r;
}

}  // namespace

ExperimentResult run_recovery_vs_g(const Scenario& sc) {
    const auto& cfg = sc.cfg;
    const double snr = cfg.snr_grid_db.front();
    const std::size_t M = sc.single.M;
    for (auto g : cfg.g_grid)
        if (g < 1 || g > M) throw Error("G out of range");
    const bool dual = wants(sc, "dpn");
    std::function<std::vector<EstimatorOutcome>(std::size_t)> fn = [&](std::size_t t) {
        const TrialSignals ts = simulate_trial(sc, cfg.seed, t, snr, true, dual);
        std::vector<EstimatorOutcome> all;
        for (auto g : cfg.g_grid) {
            auto v = evaluate_trial(sc, ts, snr, M - g + 1);
            for (auto& o : v) {
                o.dense.clear();
                all.push_back(std::move(o));
            }
        }
        return all;
    };
    const auto trials = run_trials(cfg.trials, cfg.threads, fn);
    ExperimentResult r = base_result(sc);
    const std::size_t ne = cfg.estimators.size();
    for (std::size_t gi = 0; gi < cfg.g_grid.size(); ++gi) {
        for (std::size_t e = 0; e < ne; ++e) {
            PointStats p;
            p.estimator = cfg.estimators[e];
            p.snr_db = snr;
            p.g = static_cast<long>(cfg.g_grid[gi]);
            for (const auto& tr : trials) accumulate(p, tr[gi * ne + e]);
            r.points.push_back(p);
        }
    }
    return r;
}

ExperimentResult run_mse_vs_snr(const Scenario& sc) {
    const auto& cfg = sc.cfg;
    const bool dual = wants(sc, "dpn");
    ExperimentResult r = base_result(sc);
    for (double snr : cfg.snr_grid_db) {
        std::function<std::vector<EstimatorOutcome>(std::size_t)> fn = [&](std::size_t t) {
            const TrialSignals ts = simulate_trial(sc, cfg.seed, t, snr, true, dual);
            auto v = evaluate_trial(sc, ts, snr);
            for (auto& o : v) o.dense.clear();
            return v;
        };
        const auto trials = run_trials(cfg.trials, cfg.threads, fn);
        for (std::size_t e = 0; e < cfg.estimators.size(); ++e) {
            PointStats p;
            p.estimator = cfg.estimators[e];
            p.snr_db = snr;
            for (const auto& tr : trials) accumulate(p, tr[e]);
            r.points.push_back(p);
        }
    }
    return r;
}

ExperimentResult run_ber_vs_snr(const Scenario& sc) {
    const auto& cfg = sc.cfg;
    const bool dual = wants(sc, "dpn");
    const std::uint64_t per = sc.single.bits_per_symbol();
    const std::size_t n = std::max<std::size_t>(cfg.trials, static_cast<std::size_t>((cfg.ber_min_bits + per - 1) / per));
    std::vector<std::string> names;
    for (const auto& e : cfg.estimators)
        if (e != "crlb") names.push_back(e);
    names.push_back("perfect");

    ExperimentResult r = base_result(sc);
    for (double snr : cfg.snr_grid_db) {
        std::function<std::vector<EstimatorOutcome>(std::size_t)> fn = [&](std::size_t t) {
            const TrialSignals ts = simulate_trial(sc, cfg.seed, t, snr, true, dual);
            auto v = evaluate_trial(sc, ts, snr);
            std::vector<EstimatorOutcome> keep;
            for (auto& o : v) {
                if (o.estimator == "crlb") continue;
                const ReceivedFrame& rx = o.estimator == "dpn" ? *ts.rx_dual : *ts.rx;
                const auto d = demodulate(rx, sc.chips, sc.i, o.dense);
                o.bit_errors = bit_errors(d.bits, ts.bits);
                o.dense.clear();
                keep.push_back(std::move(o));
            }
            EstimatorOutcome perfect;
            perfect.estimator = "perfect";
            perfect.mse = 0.0;
            perfect.bit_errors = bit_errors(demodulate(*ts.rx, sc.chips, sc.i, ts.truth_dense).bits, ts.bits);
            keep.push_back(std::move(perfect));
            return keep;
        };
        const auto trials = run_trials(n, cfg.threads, fn);
        for (std::size_t e = 0; e < names.size(); ++e) {
            PointStats p;
            p.estimator = names[e];
            p.snr_db = snr;
            for (const auto& tr : trials) {
                const auto& o = tr[e];
                p.trials += 1;
                p.mse_sum += o.mse;
                p.failures += o.failed ? 1 : 0;
                p.mults_sum += static_cast<double>(o.mults);
                p.bits_total += per;
                p.bits_errored += o.bit_errors;
            }
            r.points.push_back(p);
        }
    }
    return r;
}

ExperimentResult run_cir_snapshot(const Scenario& sc) {
    const auto& cfg = sc.cfg;
    const double snr = cfg.snr_grid_db.front();
    const TrialSignals ts = simulate_trial(sc, cfg.seed, 0, snr, true, wants(sc, "dpn"));
    ExperimentResult r = base_result(sc);
    r.snapshot_snr_db = snr;
    const std::size_t M = sc.single.M;
    for (std::size_t t = 0; t < M; ++t) r.snapshot.push_back({"truth", t, ts.truth_dense[t]});
    for (const auto& o : evaluate_trial(sc, ts, snr)) {
        if (o.estimator == "crlb") continue;
        for (std::size_t t = 0; t < M; ++t) r.snapshot.push_back({o.estimator, t, o.dense[t]});
        PointStats p;
        p.estimator = o.estimator;
        p.snr_db = snr;
        accumulate(p, o);
        r.points.push_back(p);
    }
    return r;
}

ExperimentResult run_experiment(const Scenario& sc) {
    switch (sc.cfg.experiment) {
        case ExperimentKind::RecoveryVsG: return run_recovery_vs_g(sc);
        case ExperimentKind::MseVsSnr: return run_mse_vs_snr(sc);
        case ExperimentKind::BerVsSnr: return run_ber_vs_snr(sc);
        case ExperimentKind::CirSnapshot: return run_cir_snapshot(sc);
    }
    throw Error("unknown experiment");
}

}  // namespace tdsce
