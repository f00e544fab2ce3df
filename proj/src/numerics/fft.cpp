#include "tdsce/numerics/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "tdsce/numerics/kernels.hpp"

namespace tdsce {
namespace {

struct Radix2Plan {
    std::size_t n = 0;
    std::vector<std::uint32_t> bitrev;
    // Stage twiddles laid out contiguously, stage s starts at offset (1 << s) - 1.
    CVec fwd;
    CVec inv;
};

struct BluesteinPlan {
    std::size_t n = 0;
    std::size_t m = 0;
    CVec chirp;       // e^{-i pi k^2 / n}
    CVec kernel_fwd;  // FFT_m of conj(chirp) extended symmetrically
};

std::unique_ptr<Radix2Plan> make_radix2(std::size_t n) {
    auto p = std::make_unique<Radix2Plan>();
    p->n = n;
    p->bitrev.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
        p->bitrev[i] = static_cast<std::uint32_t>(r);
    }
    p->fwd.resize(n > 1 ? n - 1 : 0);
    p->inv.resize(p->fwd.size());
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t j = 0; j < half; ++j) {
            const double ang = -std::numbers::pi * static_cast<double>(j) / static_cast<double>(half);
            p->fwd[half - 1 + j] = cplx(std::cos(ang), std::sin(ang));
            p->inv[half - 1 + j] = cplx(std::cos(ang), -std::sin(ang));
        }
    }
    return p;
}

const Radix2Plan& radix2_plan(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<Radix2Plan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = make_radix2(n);
    return *slot;
}

void radix2(std::span<cplx> x, FftDirection dir) {
    const std::size_t n = x.size();
    if (n <= 1) return;
    const Radix2Plan& p = radix2_plan(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = p.bitrev[i];
        if (r > i) std::swap(x[i], x[r]);
    }
    const auto& k = kernels::active();
    const CVec& tw = dir == FftDirection::Forward ? p.fwd : p.inv;
    for (std::size_t half = 1; half < n; half <<= 1) {
        const cplx* w = tw.data() + (half - 1);
        for (std::size_t base = 0; base < n; base += 2 * half) {
            k.butterfly(x.data() + base, x.data() + base + half, w, half);
        }
    }
}

std::unique_ptr<BluesteinPlan> make_bluestein(std::size_t n) {
    auto p = std::make_unique<BluesteinPlan>();
    p->n = n;
    p->m = next_pow2(2 * n - 1);
    p->chirp.resize(n);
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % two_n;
        const double ang = -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
        p->chirp[k] = cplx(std::cos(ang), std::sin(ang));
    }
    p->kernel_fwd.assign(p->m, cplx(0.0, 0.0));
    p->kernel_fwd[0] = std::conj(p->chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
        p->kernel_fwd[k] = std::conj(p->chirp[k]);
        p->kernel_fwd[p->m - k] = std::conj(p->chirp[k]);
    }
    radix2(p->kernel_fwd, FftDirection::Forward);
    return p;
}

const BluesteinPlan& bluestein_plan(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<BluesteinPlan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = make_bluestein(n);
    return *slot;
}

void bluestein(std::span<cplx> x, FftDirection dir) {
    const BluesteinPlan& p = bluestein_plan(x.size());
    const auto& k = kernels::active();
    const std::size_t n = p.n;
    // Inverse transform via conjugation of the forward one.
    if (dir == FftDirection::Inverse) {
        for (auto& v : x) v = std::conj(v);
    }
    CVec a(p.m, cplx(0.0, 0.0));
    k.mul(x.data(), p.chirp.data(), a.data(), n);
    radix2(a, FftDirection::Forward);
    k.mul(a.data(), p.kernel_fwd.data(), a.data(), p.m);
    radix2(a, FftDirection::Inverse);
    k.scale(1.0 / static_cast<double>(p.m), a.data(), n);
    k.mul(a.data(), p.chirp.data(), x.data(), n);
    if (dir == FftDirection::Inverse) {
        for (auto& v : x) v = std::conj(v);
    }
}

std::uint64_t radix2_mults(std::size_t n) {
    std::uint64_t stages = 0;
    while ((std::size_t{1} << stages) < n) ++stages;
    return static_cast<std::uint64_t>(n / 2) * stages;
}

}  // namespace

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::uint64_t fft_mult_count(std::size_t n) {
    if (n <= 1) return 0;
    if (is_pow2(n)) return radix2_mults(n);
    const std::size_t m = next_pow2(2 * n - 1);
    return 2 * radix2_mults(m) + m + 2 * n;
}

void fft_inplace(std::span<cplx> x, FftDirection dir, OpCounter* ops) {
    if (x.empty()) throw Error("empty vector");
    const std::size_t n = x.size();
    if (is_pow2(n)) {
        radix2(x, dir);
    } else {
        bluestein(x, dir);
    }
    count_mul(ops, fft_mult_count(n));
    if (dir == FftDirection::Inverse) kernels::active().scale(1.0 / static_cast<double>(n), x.data(), n);
}

CVec fft(std::span<const cplx> x, OpCounter* ops) {
    CVec out(x.begin(), x.end());
    fft_inplace(out, FftDirection::Forward, ops);
    return out;
}

CVec ifft(std::span<const cplx> x, OpCounter* ops) {
    CVec out(x.begin(), x.end());
    fft_inplace(out, FftDirection::Inverse, ops);
    return out;
}

}  // namespace tdsce
