#include "tdsce/channel/fading.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace tdsce {

CVec SparseCir::dense(std::size_t len) const {
    if (length() > len) throw Error("dimension mismatch");
    CVec h(len, cplx(0.0, 0.0));
    for (const auto& t : taps) h[t.delay] = t.gain;
    return h;
}

GainProcess::GainProcess(const TapTemplate& tmpl, double f_d_hz, double symbol_period_s, std::uint64_t seed,
                         int oscillators)
    : tmpl_(tmpl), f_d_(f_d_hz), t_sym_(symbol_period_s) {
    if (tmpl_.delays.empty()) throw Error("empty profile");
    if (oscillators < 1) throw Error("oscillator count must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    const std::size_t p = tmpl_.delays.size();
    if (f_d_ == 0.0) {
        static_gains_.resize(p);
        for (std::size_t k = 0; k < p; ++k) static_gains_[k] = std::polar(std::sqrt(tmpl_.powers[k]), u(rng));
        return;
    }
    const int K = oscillators;
    osc_.resize(p);
    for (std::size_t k = 0; k < p; ++k) {
        const double theta = u(rng);
        osc_[k].resize(static_cast<std::size_t>(K));
        for (int n = 0; n < K; ++n) {
            const double alpha = (2.0 * std::numbers::pi * (n + 1) - std::numbers::pi + theta) / (4.0 * K);
            auto& o = osc_[k][static_cast<std::size_t>(n)];
            o.fc = f_d_ * std::cos(alpha);
            o.fs = f_d_ * std::sin(alpha);
            o.phi = u(rng);
            o.psi = u(rng);
        }
    }
}

SparseCir GainProcess::at(std::size_t symbol_index) const {
    SparseCir cir;
    cir.symbol_index = symbol_index;
    const std::size_t p = tmpl_.delays.size();
    cir.taps.resize(p);
    const double t = static_cast<double>(symbol_index) * t_sym_;
    for (std::size_t k = 0; k < p; ++k) {
        cir.taps[k].delay = tmpl_.delays[k];
        if (!static_gains_.empty()) {
            cir.taps[k].gain = static_gains_[k];
            continue;
        }
        double re = 0.0, im = 0.0;
        for (const auto& o : osc_[k]) {
            re += std::cos(2.0 * std::numbers::pi * o.fc * t + o.phi);
            im += std::cos(2.0 * std::numbers::pi * o.fs * t + o.psi);
        }
        const double amp = std::sqrt(tmpl_.powers[k] / static_cast<double>(osc_[k].size()));
        cir.taps[k].gain = cplx(amp * re, amp * im);
    }
    return cir;
}

}  // namespace tdsce
