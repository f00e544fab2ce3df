#include "tdsce/harness/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "tdsce/numerics/kernels.hpp"

namespace tdsce {
namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9e", v);
    return buf;
}

std::string db(double v) { return v > 0.0 ? num(10.0 * std::log10(v)) : "-inf"; }

std::string snr_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string tool_version() { return TDSCE_VERSION; }

std::string to_csv(const ExperimentResult& r) {
    std::string out;
    const std::string prefix_head = "config_hash,seed,experiment,profile,estimator,snr_db";
    auto prefix = [&](const std::string& est, double snr) {
        return r.config_hash + "," + std::to_string(r.seed) + "," + to_string(r.kind) + "," + r.profile + "," + est +
               "," + snr_str(snr);
    };
    auto mean = [](double sum, std::size_t n) { return n ? sum / static_cast<double>(n) : 0.0; };
    switch (r.kind) {
        case ExperimentKind::RecoveryVsG:
            out += prefix_head + ",g,trials,recovery_prob,mean_mse,mean_mse_db,mean_mults,mean_iters,failures,under_observed\n";
            for (const auto& p : r.points) {
                out += prefix(p.estimator, p.snr_db) + "," + std::to_string(p.g) + "," + std::to_string(p.trials) +
                       "," + num(p.recovery()) + "," + num(p.mean_mse()) + "," + db(p.mean_mse()) + "," +
                       num(mean(p.mults_sum, p.trials)) + "," + num(mean(p.iters_sum, p.trials)) + "," +
                       std::to_string(p.failures) + "," + std::to_string(p.under_observed) + "\n";
            }
            break;
        case ExperimentKind::MseVsSnr:
            out += prefix_head + ",trials,mean_mse,mean_mse_db,mean_g_hat,mean_mults,mean_iters,failures,under_observed\n";
            for (const auto& p : r.points) {
                out += prefix(p.estimator, p.snr_db) + "," + std::to_string(p.trials) + "," + num(p.mean_mse()) + "," +
                       db(p.mean_mse()) + "," + num(mean(p.g_hat_sum, p.trials)) + "," +
                       num(mean(p.mults_sum, p.trials)) + "," + num(mean(p.iters_sum, p.trials)) + "," +
                       std::to_string(p.failures) + "," + std::to_string(p.under_observed) + "\n";
            }
            break;
        case ExperimentKind::BerVsSnr:
            out += prefix_head + ",trials,bits_total,bits_errored,ber,mean_mse,mean_mults,failures\n";
            for (const auto& p : r.points) {
                out += prefix(p.estimator, p.snr_db) + "," + std::to_string(p.trials) + "," +
                       std::to_string(p.bits_total) + "," + std::to_string(p.bits_errored) + "," + num(p.ber()) + "," +
                       num(p.mean_mse()) + "," + num(mean(p.mults_sum, p.trials)) + "," +
                       std::to_string(p.failures) + "\n";
            }
            break;
        case ExperimentKind::CirSnapshot:
            out += prefix_head + ",tap,magnitude,real,imag\n";
            for (const auto& s : r.snapshot) {
                out += prefix(s.estimator, r.snapshot_snr_db) + "," + std::to_string(s.tap) + "," +
                       num(std::abs(s.gain)) + "," + num(s.gain.real()) + "," + num(s.gain.imag()) + "\n";
            }
            break;
    }
    return out;
}

std::string metadata_json(const Scenario& sc, const ExperimentResult& r) {
    nlohmann::json taps = nlohmann::json::array();
    for (std::size_t k = 0; k < sc.taps.delays.size(); ++k)
        taps.push_back({{"delay_samples", sc.taps.delays[k]}, {"power", sc.taps.powers[k]}});
    nlohmann::json j{
        {"tool", "tdsce"},
        {"tool_version", tool_version()},
        {"config_hash", r.config_hash},
        {"seed", r.seed},
        {"experiment", to_string(r.kind)},
        {"kernel_isa", std::string(kernels::active().isa)},
        {"pn", {{"length", sc.pn.size()}, {"degree", sc.pn.generator.degree}, {"taps", sc.pn.generator.taps},
                {"seed", sc.pn.generator.seed}}},
        {"profile", {{"name", sc.profile.name}, {"source", sc.profile.source}, {"fc_hz", sc.profile.fc_hz},
                     {"fs_hz", sc.profile.fs_hz}, {"delays_us", sc.profile.delays_us},
                     {"powers_db", sc.profile.powers_db}, {"quantized", taps},
                     {"doppler", sc.profile.doppler.kind == DopplerKind::Static ? "static" : "jakes"},
                     {"v_mps", sc.profile.doppler.v_mps}}},
        {"coherence", {{"R_d", sc.params.R_d}, {"R_g1", sc.params.R_g1}, {"R_g2", sc.params.R_g2},
                       {"f_d_hz", sc.params.f_d_hz}}},
        {"estimated_symbol", sc.i},
        {"symbols_per_burst", sc.n_sym},
        {"mse_normalization", "||h_est - h||^2 / ||h||^2 over M taps; recovery means mse < 1e-2"},
        {"config", nlohmann::json::parse(canonical_json(sc.cfg))},
    };
    return j.dump(2) + "\n";
}

void write_outputs(const std::filesystem::path& csv_path, const Scenario& sc, const ExperimentResult& r) {
    {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw Error("cannot write " + csv_path.string());
        out << to_csv(r);
    }
    auto meta = csv_path;
    meta.replace_extension(".meta");
    std::ofstream out(meta, std::ios::binary);
    if (!out) throw Error("cannot write " + meta.string());
    out << metadata_json(sc, r);
}

}  // namespace tdsce
