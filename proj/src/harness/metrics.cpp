#include "tdsce/harness/metrics.hpp"

#include <cmath>

#include "tdsce/numerics/fft.hpp"
#include "tdsce/numerics/linalg.hpp"

namespace tdsce {

double mse(std::span<const cplx> est, std::span<const cplx> truth) {
    if (est.size() != truth.size()) throw Error("dimension mismatch");
    const double den = norm2(truth);
    if (den == 0.0) throw Error("all-zero truth");
    double num = 0.0;
    for (std::size_t n = 0; n < est.size(); ++n) num += std::norm(est[n] - truth[n]);
    return num / den;
}

double mse(std::span<const cplx> est, const SparseCir& truth) {
    const CVec t = truth.dense(est.size());
    return mse(est, std::span<const cplx>(t));
}

double to_db(double v) { return 10.0 * std::log10(v); }

double qpsk_ber_analytic(double snr_linear) { return 0.5 * std::erfc(std::sqrt(snr_linear / 2.0)); }

std::size_t bit_errors(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) throw Error("dimension mismatch");
    std::size_t e = 0;
    for (std::size_t n = 0; n < a.size(); ++n) e += (a[n] != b[n]);
    return e;
}

Demodulated demodulate(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t i,
                       std::span<const cplx> est_dense, double eps) {
    const auto& f = rx.frame();
    const std::size_t M = f.M, N = f.N;
    if (pn.size() != M || est_dense.size() != M) throw Error("dimension mismatch");
    if (N < M) throw Error("data block shorter than the guard");
    const auto data = rx.data(i);
    const auto next = rx.window(rx.symbol_start(i) + f.guard() + N, M);

    // (c * h)[n] for n in [0, 2M - 1).
    CVec ch(2 * M - 1, cplx(0.0, 0.0));
    for (std::size_t tau = 0; tau < M; ++tau) {
        if (est_dense[tau] == cplx(0.0, 0.0)) continue;
        for (std::size_t m = 0; m < M; ++m) ch[tau + m] += est_dense[tau] * pn[m];
    }
    // The data tail spills only over the estimated channel length.
    std::size_t len = M;
    while (len > 0 && est_dense[len - 1] == cplx(0.0, 0.0)) --len;
    CVec z(data.begin(), data.end());
    for (std::size_t n = 0; n + 1 < len; ++n) {
        z[n] -= ch[M + n];
        z[n] += next[n] - ch[n];
    }
    fft_inplace(z, FftDirection::Forward);
    CVec h(N, cplx(0.0, 0.0));
    std::copy(est_dense.begin(), est_dense.end(), h.begin());
    fft_inplace(h, FftDirection::Forward);

    Demodulated out;
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::size_t k = 0; k < N; ++k) {
        const double p = std::norm(h[k]);
        if (p < eps) {
            out.regularized = true;
            z[k] = z[k] * std::conj(h[k]) / (p + eps) * scale;
        } else {
            z[k] = z[k] / h[k] * scale;
        }
    }
    out.bits = qpsk_demap(z);
    return out;
}

}  // namespace tdsce
