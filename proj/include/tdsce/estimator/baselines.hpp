#pragma once

#include <optional>

#include "tdsce/estimator/estimate.hpp"
#include "tdsce/estimator/measurement.hpp"

namespace tdsce {

struct IhtOptions {
    int max_iters = 20;
    double tol = -1.0;             // negative -> 1e-8 * ||y_bar||
    double divergence_ratio = 1e6;  // residual > ratio * ||y_bar|| -> diverged
};

/// x <- H_S(x + Phi^H (y - Phi x)) from zero.
ChannelEstimate iht_classic(const Measurement& meas, std::size_t S, std::size_t M, IhtOptions opt = {});

struct CosampOptions {
    int max_iters = 0;                 // 0 -> S
    double tol = -1.0;                 // negative -> 1e-8 * ||y_bar||
    bool stop_on_no_decrease = false;  // keep the previous iterate once the residual stops falling
};

/// CoSaMP. warm_support seeds the first iterate with a least-squares fit on that support.
ChannelEstimate cosamp(const Measurement& meas, std::size_t S, std::size_t M,
                       const std::optional<Support>& warm_support = std::nullopt, CosampOptions opt = {});

}  // namespace tdsce
