#pragma once

#include "tdsce/channel/profile.hpp"

namespace tdsce {

inline constexpr double kSpeedOfLight = 299792458.0;

struct CoherenceParams {
    int R_d = 1;
    int R_g1 = 1;
    int R_g2 = 1;
    double f_d_hz = 0.0;
};

/// Mobile: horizons from the Doppler floor expressions. Static: R_g1 = static_R_g1, R_d = R_g2 = (R_g1 + 1) / 2.
CoherenceParams coherence_params(const ChannelProfile& p, std::size_t M, std::size_t N, int cap_R_d,
                                 int static_R_g1);

}  // namespace tdsce
