#pragma once

// Synthetic received bursts and small support-recovery instances shared by the tests.

#include <algorithm>
#include <optional>
#include <random>

#include "oracles.hpp"
#include "tdsce/channel/transmit.hpp"
#include "tdsce/estimator/measurement.hpp"
#include "tdsce/numerics/correlate.hpp"
#include "tdsce/signal/frame.hpp"

namespace fixture {

using namespace tdsce;

struct Burst {
    PnSequence pn;
    CVec c;
    FrameConfig frame;
    std::optional<ReceivedFrame> rx;
    Bits bits;
};

/// nsym symbols through a fixed CIR. zero_data blanks the OFDM payload so only the PN is on air.
inline Burst make_burst(std::size_t M, std::size_t N, std::size_t nsym, const SparseCir& h, bool dual,
                        double snr_db, std::uint64_t seed, bool zero_data = false) {
    Burst b;
    b.pn = generate_pn(M, M == 255 ? PnGenerator{} : default_generator(M));
    b.c = b.pn.chips();
    b.frame.M = M;
    b.frame.N = N;
    b.frame.dual_pn = dual;
    b.frame.symbols_per_run = nsym;
    std::mt19937_64 rng(seed);
    b.bits.resize(nsym * b.frame.bits_per_symbol());
    for (auto& v : b.bits) v = rng() & 1U;
    CVec tx = assemble_stream(b.frame, b.bits, b.pn).transmit();
    if (zero_data) {
        for (std::size_t k = 0; k < nsym; ++k)
            std::fill_n(tx.begin() + static_cast<std::ptrdiff_t>(k * b.frame.symbol_length() + b.frame.guard()), N,
                        cplx(0, 0));
    }
    std::vector<SparseCir> cirs(nsym, h);
    b.rx.emplace(transmit(tx, b.frame.symbol_length(), b.frame.guard(), cirs, snr_db, rng), b.frame);
    return b;
}

inline SparseCir cir(std::initializer_list<Tap> taps) {
    SparseCir h;
    h.taps = taps;
    return h;
}

/// (1/M) c correlated with the circular convolution c * h: noiseless coarse gains with the full tail folded.
inline CVec noiseless_coarse_gains(const CVec& c, const CVec& h) {
    const std::size_t M = c.size();
    CVec r(M, cplx(0, 0));
    for (std::size_t n = 0; n < M; ++n)
        for (std::size_t t = 0; t < h.size(); ++t) r[(n + t) % M] += c[n] * h[t];
    CVec g = oracle::circ_corr(c, r);
    for (auto& v : g) v /= static_cast<double>(M);
    return g;
}

struct SupportInstance {
    CVec c;
    CVec h;  // length L
    Support truth;
    CoarsePriors priors;
    Measurement meas;
};

/// Noiseless instance with L in [4, 12] and 1..3 paths. Priors come from the noiseless coarse correlation:
/// D0 keeps taps within 6 dB of the strongest, S is the true sparsity.
inline SupportInstance make_support_instance(std::mt19937_64& rng, std::size_t M) {
    std::uniform_int_distribution<std::size_t> Ld(4, 12), Sd(1, 3);
    const std::size_t L = Ld(rng), S = Sd(rng);
    SupportInstance in{generate_pn(M, default_generator(M)).chips(), CVec(L, cplx(0, 0)), {}, {},
                       Measurement{{}, ToeplitzOperator::from_pn(CVec(M, cplx(1, 0)), 1), 0, false}};
    std::vector<std::size_t> idx(L);
    for (std::size_t k = 0; k < L; ++k) idx[k] = k;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(S);
    std::sort(idx.begin(), idx.end());
    in.truth = idx;
    std::normal_distribution<double> g(0.0, 1.0);
    for (auto t : idx) {
        cplx v(g(rng), g(rng));
        v *= (0.3 + std::abs(v)) / std::abs(v);
        in.h[t] = v;
    }
    auto phi = ToeplitzOperator::from_pn(in.c, L);
    CVec y = phi.apply(in.h);
    in.meas = Measurement{std::move(y), std::move(phi), 2, false};

    auto& p = in.priors;
    p.h_bar_prime = noiseless_coarse_gains(in.c, in.h);
    p.h_bar.resize(M);
    for (std::size_t t = 0; t < M; ++t) p.h_bar[t] = std::abs(p.h_bar_prime[t]);
    double peak = 0;
    for (std::size_t t = 0; t < L; ++t) peak = std::max(peak, p.h_bar[t]);
    for (std::size_t t = 0; t < L; ++t)
        if (p.h_bar[t] >= 0.5 * peak) p.D0.push_back(t);
    p.L_hat = L;
    p.G_hat = M - L + 1;
    p.S0 = p.D0.size();
    p.S = std::max(S, p.S0);
    p.b = static_cast<int>(p.S - p.S0);
    return in;
}

}  // namespace fixture
