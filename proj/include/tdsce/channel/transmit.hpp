#pragma once

#include <random>
#include <span>

#include "tdsce/channel/fading.hpp"

namespace tdsce {

/// Noise variance for a given SNR relative to signal_power.
double noise_variance(double snr_db, double signal_power = 1.0);

/// Per-symbol linear convolution with true inter-block interference, plus AWGN.
/// cirs[k] acts on samples [k * symbol_length, (k + 1) * symbol_length); tails spill forward.
/// Output length is tx.size() + L_max - 1. snr_db = +inf disables noise.
CVec transmit(std::span<const cplx> tx, std::size_t symbol_length, std::size_t guard,
              std::span<const SparseCir> cirs, double snr_db, std::mt19937_64& rng, double signal_power = 1.0);

void add_awgn(std::span<cplx> x, double variance, std::mt19937_64& rng);

}  // namespace tdsce
