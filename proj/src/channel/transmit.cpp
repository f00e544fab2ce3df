#include "tdsce/channel/transmit.hpp"

#include <algorithm>
#include <cmath>

#include "tdsce/numerics/kernels.hpp"

namespace tdsce {

double noise_variance(double snr_db, double signal_power) {
    if (std::isinf(snr_db) && snr_db > 0) return 0.0;
    return signal_power * std::pow(10.0, -snr_db / 10.0);
}

void add_awgn(std::span<cplx> x, double variance, std::mt19937_64& rng) {
    if (variance <= 0.0) return;
    std::normal_distribution<double> g(0.0, std::sqrt(variance / 2.0));
    for (auto& v : x) {
        const double re = g(rng);
        const double im = g(rng);
        v += cplx(re, im);
    }
}

CVec transmit(std::span<const cplx> tx, std::size_t symbol_length, std::size_t guard,
              std::span<const SparseCir> cirs, double snr_db, std::mt19937_64& rng, double signal_power) {
    if (symbol_length == 0) throw Error("symbol length must be positive");
    const std::size_t nsym = (tx.size() + symbol_length - 1) / symbol_length;
    if (cirs.size() != nsym) throw Error("one CIR per symbol required");
    std::size_t lmax = 1;
    for (const auto& c : cirs) {
        if (c.length() > guard) throw Error("guard violated");
        lmax = std::max(lmax, c.length());
    }
    CVec rx(tx.size() + lmax - 1, cplx(0.0, 0.0));
    const auto& k = kernels::active();
    for (std::size_t s = 0; s < nsym; ++s) {
        const std::size_t start = s * symbol_length;
        const std::size_t len = std::min(symbol_length, tx.size() - start);
        for (const auto& tap : cirs[s].taps) {
            k.axpy(tap.gain, tx.data() + start, rx.data() + start + tap.delay, len);
        }
    }
    add_awgn(rx, noise_variance(snr_db, signal_power), rng);
    return rx;
}

}  // namespace tdsce
