#pragma once

#include <optional>

#include "tdsce/channel/coherence.hpp"
#include "tdsce/estimator/received.hpp"
#include "tdsce/numerics/select.hpp"

namespace tdsce {

/// E_th = max(noise_factor * 1.4826 * median(h_bar[guard_band:]), relative * max(h_bar)).
struct ThresholdRule {
    double noise_factor = 3.0;
    double relative = 0.05;
    std::size_t guard_band = 0;
};

struct CoarseSettings {
    std::optional<int> a;     // fixed channel-length margin; unset -> max(1, round(a_fraction * max D0))
    double a_fraction = 0.1;
    int b = 2;
    ThresholdRule threshold;
};

struct CoarsePriors {
    Support D0;
    RVec h_bar;         // length M
    CVec h_bar_prime;   // length M, empty until coarse_gains runs
    std::size_t L_hat = 0;
    std::size_t G_hat = 0;
    std::size_t S0 = 0;
    std::size_t S = 0;
    double E_th = 0.0;
    int a = 0;
    int b = 0;
    bool guard_limited = false;
};

double threshold_level(std::span<const double> h_bar, const ThresholdRule& rule);

/// Indices with h_bar >= E_th. Empty result raises "no paths detected".
Support detect_paths(std::span<const double> h_bar, double e_th);

/// Fills L_hat, S0, S, G_hat and a from D0. forced_L_hat overrides the adaptive length.
void size_priors(CoarsePriors& p, std::size_t M, const CoarseSettings& s, std::optional<std::size_t> forced_L_hat);

/// Step 1: averaged magnitude of the overlap-add correlation over the delay horizon.
CoarsePriors coarse_delays(const ReceivedFrame& rx, std::span<const cplx> pn, const CoherenceParams& params,
                           std::size_t i, const CoarseSettings& s,
                           std::optional<std::size_t> forced_L_hat = std::nullopt);

/// Step 2: complex coarse gains with the tail truncated to L_hat.
CVec coarse_gains(const ReceivedFrame& rx, std::span<const cplx> pn, const CoherenceParams& params, std::size_t i,
                  std::size_t L_hat);

/// TS-only correlation of symbols i and i+1 with no tail, used by the modified CoSaMP front end.
CoarsePriors coarse_delays_main_only(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t i,
                                     const CoarseSettings& s,
                                     std::optional<std::size_t> forced_L_hat = std::nullopt);

}  // namespace tdsce
