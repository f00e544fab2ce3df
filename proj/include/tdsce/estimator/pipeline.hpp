#pragma once

#include <optional>

#include "tdsce/estimator/baselines.hpp"
#include "tdsce/estimator/pa_iht.hpp"

namespace tdsce {

struct PaIhtRun {
    CoarsePriors priors;
    std::optional<Measurement> meas;
    ChannelEstimate detection;  // PA-IHT output, prior gains
    ChannelEstimate refined;    // ML gains; ops cover detection and refinement
};

/// Coarse acquisition, PA-IHT and ML refinement for symbol i.
PaIhtRun run_pa_iht(const ReceivedFrame& rx, std::span<const cplx> pn, const CoherenceParams& params, std::size_t i,
                    const CoarseSettings& coarse, const PaIhtOptions& opt = {},
                    std::optional<std::size_t> forced_L_hat = std::nullopt);

/// Final ML step. Falls back to ml_refine_ranked when the support is singular or exceeds G_hat.
ChannelEstimate refine_detection(const Measurement& meas, const ChannelEstimate& detection, std::size_t M);

struct McosampRun {
    CoarsePriors priors;
    std::optional<Measurement> meas;
    ChannelEstimate estimate;
};

/// Modified CoSaMP: TS-only coarse support of symbols i, i+1, warm-started CoSaMP for S - S0 iterations.
McosampRun run_mcosamp(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t i, const CoarseSettings& coarse,
                       std::optional<std::size_t> forced_L_hat = std::nullopt);

}  // namespace tdsce
