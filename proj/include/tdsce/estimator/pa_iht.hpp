#pragma once

#include "tdsce/estimator/estimate.hpp"
#include "tdsce/estimator/measurement.hpp"

namespace tdsce {

struct PaIhtOptions {
    int max_iters = 20;
    double tol = -1.0;  // negative -> 1e-8 * ||y_bar||
};

/// Prior-aided IHT: gains on the selected support are taken from h_bar_prime, never re-fit.
ChannelEstimate pa_iht(const Measurement& meas, const CoarsePriors& priors, PaIhtOptions opt = {});

/// Least-squares gains on D. Rank deficiency raises "singular support".
ChannelEstimate ml_refine(const Measurement& meas, const Support& D, std::size_t M, OpCounter* ops = nullptr);

/// Keeps at most G_hat indices, strongest first, and drops columns that are linearly dependent on stronger ones.
ChannelEstimate ml_refine_ranked(const Measurement& meas, const ChannelEstimate& detected, std::size_t M,
                                 OpCounter* ops = nullptr);

/// S / (2 R_g2 G rho).
double crlb(double S, double G, double R_g2, double snr_linear);

}  // namespace tdsce
