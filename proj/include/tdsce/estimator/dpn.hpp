#pragma once

#include "tdsce/estimator/coarse.hpp"
#include "tdsce/estimator/estimate.hpp"

namespace tdsce {

struct DpnEstimate {
    CVec raw;               // (1/M) c correlated with the second PN window, averaged over R symbols
    ChannelEstimate taps;   // raw thresholded at E_th
    double E_th = 0.0;
};

/// Dual-PN estimator over symbols i .. i+R-1.
DpnEstimate dpn_estimate(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t i, int R,
                         const ThresholdRule& rule = {});

}  // namespace tdsce
