#pragma once

#include <span>

#include "tdsce/channel/fading.hpp"
#include "tdsce/estimator/received.hpp"
#include "tdsce/signal/qpsk.hpp"

namespace tdsce {

/// ||est - truth||^2 / ||truth||^2 over equal-length dense views.
double mse(std::span<const cplx> est, std::span<const cplx> truth);
double mse(std::span<const cplx> est, const SparseCir& truth);

inline bool recovered(double m) { return m < 1e-2; }

double to_db(double v);

/// Q(sqrt(snr)): QPSK bit error rate with unit-energy symbols at Es/N0 = snr.
double qpsk_ber_analytic(double snr_linear);

struct Demodulated {
    Bits bits;
    bool regularized = false;  // some DFT bin of the estimate fell below eps
};

/// Removes the estimated TS tail from the data head, folds the data tail back from the next TS window,
/// then one-tap zero-forcing and hard QPSK decisions for symbol i.
Demodulated demodulate(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t i,
                       std::span<const cplx> est_dense, double eps = 1e-12);

std::size_t bit_errors(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace tdsce
