#include "tdsce/estimator/dpn.hpp"

#include "tdsce/numerics/correlate.hpp"
#include "tdsce/numerics/linalg.hpp"

namespace tdsce {

DpnEstimate dpn_estimate(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t i, int R,
                         const ThresholdRule& rule) {
    if (!rx.frame().dual_pn) throw Error("dual PN framing required");
    if (R < 1) throw Error("R must be positive");
    const std::size_t M = pn.size();
    if (M != rx.frame().M) throw Error("dimension mismatch");
    CVec acc(M, cplx(0.0, 0.0));
    for (std::size_t k = i; k < i + static_cast<std::size_t>(R); ++k) {
        const auto w = rx.ts_main(k);
        for (std::size_t n = 0; n < M; ++n) acc[n] += w[n];
    }
    DpnEstimate out;
    OpCounter ops;
    out.raw = circular_correlate(pn, acc, &ops);
    const double scale = 1.0 / (static_cast<double>(M) * R);
    for (auto& v : out.raw) v *= scale;

    const RVec mag = [&] {
        RVec m(M);
        for (std::size_t n = 0; n < M; ++n) m[n] = std::abs(out.raw[n]);
        return m;
    }();
    out.E_th = threshold_level(mag, rule);
    CVec kept(M, cplx(0.0, 0.0));
    for (std::size_t n = 0; n < M; ++n)
        if (mag[n] >= out.E_th) kept[n] = out.raw[n];
    out.taps = estimate_from_coeffs(kept, M);
    out.taps.ops = ops;
    return out;
}

}  // namespace tdsce
