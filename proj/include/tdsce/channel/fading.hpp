#pragma once

#include <cstdint>

#include "tdsce/channel/profile.hpp"

namespace tdsce {

struct Tap {
    std::size_t delay = 0;
    cplx gain;
};

struct SparseCir {
    std::vector<Tap> taps;  // ascending delay
    std::size_t symbol_index = 0;

    std::size_t length() const { return taps.empty() ? 0 : taps.back().delay + 1; }
    /// h[tau_p] = alpha_p, zero-padded to len.
    CVec dense(std::size_t len) const;
};

/// Per-tap gain process. f_d == 0 gives a static channel with random phases.
/// Otherwise each tap is a sum of sinusoids with K oscillators, held constant over a symbol.
class GainProcess {
public:
    GainProcess(const TapTemplate& tmpl, double f_d_hz, double symbol_period_s, std::uint64_t seed,
                int oscillators = 16);

    SparseCir at(std::size_t symbol_index) const;
    const TapTemplate& taps() const { return tmpl_; }

private:
    struct Osc {
        double fc;  // f_d cos(alpha)
        double fs;  // f_d sin(alpha)
        double phi;
        double psi;
    };
    TapTemplate tmpl_;
    double f_d_ = 0.0;
    double t_sym_ = 0.0;
    std::vector<cplx> static_gains_;
    std::vector<std::vector<Osc>> osc_;
};

}  // namespace tdsce
