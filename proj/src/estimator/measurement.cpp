#include "tdsce/estimator/measurement.hpp"

namespace tdsce {

Measurement build_measurement(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t L_hat, std::size_t S,
                              int R_g2, std::size_t i) {
    const std::size_t M = pn.size();
    if (L_hat < 1 || L_hat > M) throw Error("guard violated");
    if (R_g2 < 1) throw Error("R_g2 must be positive");
    const long first = static_cast<long>(i) - R_g2 + 1;
    if (first < 0) throw Error("stream too short");
    const std::size_t G = M - L_hat + 1;
    CVec y(G, cplx(0.0, 0.0));
    for (long k = first; k <= static_cast<long>(i) + R_g2; ++k) {
        const auto main = rx.ts_main(static_cast<std::size_t>(k));
        for (std::size_t n = 0; n < G; ++n) y[n] += main[L_hat - 1 + n];
    }
    const double inv = 1.0 / (2.0 * R_g2);
    for (auto& v : y) v *= inv;
    return Measurement{std::move(y), ToeplitzOperator::from_pn(pn, L_hat), 2 * R_g2, G < S};
}

}  // namespace tdsce
