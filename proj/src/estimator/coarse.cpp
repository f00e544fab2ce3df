#include "tdsce/estimator/coarse.hpp"

#include <algorithm>
#include <cmath>

#include "tdsce/numerics/correlate.hpp"

namespace tdsce {
namespace {

double median(RVec v) {
    if (v.empty()) throw Error("empty vector");
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) {
        m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
    }
    return m;
}

void require_symbols(const ReceivedFrame& rx, long first, long last) {
    if (first < 0) throw Error("stream too short");
    const std::size_t need_end = rx.symbol_start(static_cast<std::size_t>(last)) + rx.frame().guard() + rx.frame().M;
    if (need_end > rx.samples().size()) throw Error("stream too short");
}

}  // namespace

double threshold_level(std::span<const double> h_bar, const ThresholdRule& rule) {
    if (h_bar.empty()) throw Error("empty vector");
    const std::size_t gb = std::min(rule.guard_band, h_bar.size() - 1);
    const double noise = 1.4826 * median(RVec(h_bar.begin() + static_cast<std::ptrdiff_t>(gb), h_bar.end()));
    const double peak = *std::max_element(h_bar.begin(), h_bar.end());
    return std::max(rule.noise_factor * noise, rule.relative * peak);
}

Support detect_paths(std::span<const double> h_bar, double e_th) {
    Support d;
    for (std::size_t t = 0; t < h_bar.size(); ++t)
        if (h_bar[t] >= e_th && h_bar[t] > 0.0) d.push_back(t);
    if (d.empty()) throw Error("no paths detected");
    return d;
}

void size_priors(CoarsePriors& p, std::size_t M, const CoarseSettings& s, std::optional<std::size_t> forced_L_hat) {
    if (s.b < 0) throw Error("b must be nonnegative");
    p.b = s.b;
    if (forced_L_hat) {
        if (*forced_L_hat < 1 || *forced_L_hat > M) throw Error("G out of range");
        p.L_hat = *forced_L_hat;
        Support kept;
        for (auto t : p.D0)
            if (t < p.L_hat) kept.push_back(t);
        if (kept.empty()) throw Error("no paths detected");
        p.D0 = kept;
        p.a = static_cast<int>(p.L_hat) - static_cast<int>(p.D0.back());
    } else {
        const std::size_t tmax = p.D0.back();
        p.a = s.a ? *s.a : std::max(1, static_cast<int>(std::lround(s.a_fraction * static_cast<double>(tmax))));
        if (p.a < 0) throw Error("a must be nonnegative");
        std::size_t L = tmax + static_cast<std::size_t>(std::max(p.a, 1));
        if (L > M) {
            L = M;
            p.guard_limited = true;
        }
        p.L_hat = L;
    }
    p.G_hat = M - p.L_hat + 1;
    p.S0 = p.D0.size();
    p.S = std::min(p.S0 + static_cast<std::size_t>(p.b), p.L_hat);
}

CoarsePriors coarse_delays(const ReceivedFrame& rx, std::span<const cplx> pn, const CoherenceParams& params,
                           std::size_t i, const CoarseSettings& s, std::optional<std::size_t> forced_L_hat) {
    const std::size_t M = pn.size();
    if (M != rx.frame().M) throw Error("dimension mismatch");
    const long R_d = params.R_d;
    const long R_g1 = std::min<long>(params.R_g1, 2 * R_d - 1);
    const long ii = static_cast<long>(i);
    const long q_first = ii - R_d + 1;
    const long q_last = ii + R_d - R_g1;
    require_symbols(rx, q_first, q_last + R_g1 - 1);

    // Running sum over R_g1 consecutive overlap-added windows.
    CVec acc(M, cplx(0.0, 0.0));
    for (long k = q_first; k < q_first + R_g1; ++k) {
        const CVec r = overlap_add_ts(rx, static_cast<std::size_t>(k), M);
        for (std::size_t n = 0; n < M; ++n) acc[n] += r[n];
    }
    CircularCorrelator corr(pn);
    const double scale = 1.0 / (static_cast<double>(M) * static_cast<double>(R_g1));
    CoarsePriors p;
    p.h_bar.assign(M, 0.0);
    for (long q = q_first;; ++q) {
        const CVec u = corr(acc);
        for (std::size_t n = 0; n < M; ++n) p.h_bar[n] += std::abs(u[n]) * scale;
        if (q == q_last) break;
        const CVec drop = overlap_add_ts(rx, static_cast<std::size_t>(q), M);
        const CVec add = overlap_add_ts(rx, static_cast<std::size_t>(q + R_g1), M);
        for (std::size_t n = 0; n < M; ++n) acc[n] += add[n] - drop[n];
    }
    const double nq = static_cast<double>(q_last - q_first + 1);
    for (auto& v : p.h_bar) v /= nq;

    p.E_th = threshold_level(p.h_bar, s.threshold);
    p.D0 = detect_paths(p.h_bar, p.E_th);
    size_priors(p, M, s, forced_L_hat);
    return p;
}

CVec coarse_gains(const ReceivedFrame& rx, std::span<const cplx> pn, const CoherenceParams& params, std::size_t i,
                  std::size_t L_hat) {
    const std::size_t M = pn.size();
    if (L_hat < 1 || L_hat > M) throw Error("guard violated");
    const long R = params.R_g2;
    const long ii = static_cast<long>(i);
    require_symbols(rx, ii - R + 1, ii + R);
    CVec acc(M, cplx(0.0, 0.0));
    for (long k = ii - R + 1; k <= ii + R; ++k) {
        const CVec r = overlap_add_ts(rx, static_cast<std::size_t>(k), L_hat);
        for (std::size_t n = 0; n < M; ++n) acc[n] += r[n];
    }
    CVec g = circular_correlate(pn, acc);
    const double scale = 1.0 / (2.0 * static_cast<double>(R) * static_cast<double>(M));
    for (auto& v : g) v *= scale;
    return g;
}

CoarsePriors coarse_delays_main_only(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t i,
                                     const CoarseSettings& s, std::optional<std::size_t> forced_L_hat) {
    const std::size_t M = pn.size();
    require_symbols(rx, static_cast<long>(i), static_cast<long>(i) + 1);
    CVec acc(M, cplx(0.0, 0.0));
    for (std::size_t k = i; k <= i + 1; ++k) {
        const auto main = rx.ts_main(k);
        for (std::size_t n = 0; n < M; ++n) acc[n] += main[n];
    }
    CVec g = circular_correlate(pn, acc);
    CoarsePriors p;
    p.h_bar.resize(M);
    p.h_bar_prime.resize(M);
    for (std::size_t n = 0; n < M; ++n) {
        p.h_bar_prime[n] = g[n] / (2.0 * static_cast<double>(M));
        p.h_bar[n] = std::abs(p.h_bar_prime[n]);
    }
    p.E_th = threshold_level(p.h_bar, s.threshold);
    try {
        p.D0 = detect_paths(p.h_bar, p.E_th);
    } catch (const Error&) {
        p.D0 = top_k_support(std::span<const double>(p.h_bar), 1);
    }
    size_priors(p, M, s, forced_L_hat);
    return p;
}

}  // namespace tdsce
