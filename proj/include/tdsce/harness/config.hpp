#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "tdsce/channel/coherence.hpp"
#include "tdsce/estimator/coarse.hpp"
#include "tdsce/estimator/pa_iht.hpp"
#include "tdsce/signal/frame.hpp"

namespace tdsce {

enum class ExperimentKind { RecoveryVsG, MseVsSnr, BerVsSnr, CirSnapshot };

std::string to_string(ExperimentKind k);
ExperimentKind parse_experiment(const std::string& s);

struct BBand {
    double min_snr_db = 0.0;
    int b = 2;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::MseVsSnr;
    std::string profile = "itu_vb";
    RVec snr_grid_db{20.0};
    std::vector<std::size_t> g_grid;
    std::size_t trials = 100;
    std::vector<std::string> estimators{"pa_iht"};
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0 -> hardware concurrency

    FrameConfig frame;
    PnGenerator pn;

    CoarseSettings coarse;     // b here is the fallback when no band matches
    std::vector<BBand> b_table;

    int cap_R_d = 40;
    int static_R_g1 = 79;
    std::optional<int> R_d, R_g1, R_g2;  // explicit overrides

    PaIhtOptions pa_iht;
    int iht_max_iters = 20;
    int cosamp_max_iters = 0;  // 0 -> S
    int dpn_R = 1;
    std::uint64_t ber_min_bits = 100000;

    /// b for a given SNR: the band with the largest min_snr_db not above snr, else coarse.b.
    int b_for(double snr_db) const;
    void validate() const;
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical JSON of the effective configuration (all defaults filled in).
std::string canonical_json(const ExperimentConfig& cfg);
/// FNV-1a 64 of canonical_json, 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

/// Strict unsigned 64-bit parse (decimal, 0x hex or octal). Anything else raises "invalid <what>: <s>".
std::uint64_t parse_u64(const std::string& s, const std::string& what);

/// Seed precedence: config < SIM_SEED (env_value, may be null) < --seed (cli_value, empty when absent).
std::uint64_t resolve_seed(std::uint64_t config_seed, const char* env_value, const std::string& cli_value);

inline const std::vector<std::string>& known_estimators() {
    static const std::vector<std::string> k{"pa_iht", "iht", "cosamp", "mcosamp", "dpn", "crlb"};
    return k;
}

}  // namespace tdsce
