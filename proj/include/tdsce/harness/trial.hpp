#pragma once

#include <filesystem>
#include <optional>

#include "tdsce/channel/coherence.hpp"
#include "tdsce/channel/fading.hpp"
#include "tdsce/estimator/received.hpp"
#include "tdsce/harness/config.hpp"

namespace tdsce {

std::filesystem::path default_profiles_dir();

/// Everything fixed across trials of one run.
struct Scenario {
    ExperimentConfig cfg;
    ChannelProfile profile;
    TapTemplate taps;
    CoherenceParams params;
    PnSequence pn;
    CVec chips;
    FrameConfig single;
    FrameConfig dual;
    std::size_t i = 0;      // estimated symbol
    std::size_t n_sym = 0;  // symbols per simulated burst
    double t_sym = 0.0;     // seconds per single-PN symbol
};

Scenario make_scenario(const ExperimentConfig& cfg, const ChannelProfile& profile);
Scenario make_scenario(const ExperimentConfig& cfg, const std::filesystem::path& profiles_dir = default_profiles_dir());

struct TrialSignals {
    std::optional<ReceivedFrame> rx;
    std::optional<ReceivedFrame> rx_dual;
    SparseCir truth;  // CIR of symbol i
    CVec truth_dense; // length M
    Bits bits;        // payload of symbol i
};

/// One burst. The same payload and per-symbol CIRs drive both framings.
TrialSignals simulate_trial(const Scenario& sc, std::uint64_t seed, std::size_t trial, double snr_db,
                            bool single = true, bool dual = false);

}  // namespace tdsce
