#pragma once

#include "tdsce/estimator/coarse.hpp"
#include "tdsce/numerics/toeplitz.hpp"

namespace tdsce {

struct Measurement {
    CVec y_bar;            // length G_hat
    ToeplitzOperator phi;  // G_hat x L_hat
    int averaged_over = 0;
    bool under_observed = false;

    std::size_t G_hat() const { return phi.rows(); }
    std::size_t L_hat() const { return phi.cols(); }
};

/// Averages the IBI-free tails of symbols i-R_g2+1 .. i+R_g2.
Measurement build_measurement(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t L_hat, std::size_t S,
                              int R_g2, std::size_t i);

inline Measurement build_measurement(const ReceivedFrame& rx, std::span<const cplx> pn, const CoarsePriors& p,
                                     const CoherenceParams& params, std::size_t i) {
    return build_measurement(rx, pn, p.L_hat, p.S, params.R_g2, i);
}

}  // namespace tdsce
