#include "tdsce/channel/coherence.hpp"

#include <algorithm>
#include <cmath>

namespace tdsce {

CoherenceParams coherence_params(const ChannelProfile& p, std::size_t M, std::size_t N, int cap_R_d,
                                 int static_R_g1) {
    CoherenceParams c;
    if (p.doppler.kind == DopplerKind::Static) {
        if (static_R_g1 < 1 || static_R_g1 % 2 == 0) throw Error("static R_g1 must be odd and positive");
        c.R_g1 = static_R_g1;
        c.R_d = (static_R_g1 + 1) / 2;
        c.R_g2 = c.R_d;
        return c;
    }
    const double v = p.doppler.v_mps;
    if (!(v > 0.0)) throw Error("use static");
    if (cap_R_d < 1) throw Error("cap_R_d must be positive");
    const double ts = 1.0 / p.fs_hz;
    const double span = static_cast<double>(M + N);
    c.f_d_hz = v * p.fc_hz / kSpeedOfLight;
    c.R_g1 = std::max(1, static_cast<int>(std::floor(kSpeedOfLight / (2.0 * v * span * p.fc_hz * ts))));
    const double rd = std::floor(kSpeedOfLight / (2.0 * v * span * p.fs_hz * ts));
    c.R_d = static_cast<int>(std::max(1.0, std::min(static_cast<double>(cap_R_d), rd)));
    c.R_g2 = 1;
    return c;
}

}  // namespace tdsce
