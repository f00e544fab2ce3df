#include "tdsce/harness/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "tdsce/estimator/pipeline.hpp"
#include "tdsce/harness/experiments.hpp"
#include "tdsce/harness/output.hpp"
#include "tdsce/numerics/correlate.hpp"
#include "tdsce/numerics/fft.hpp"
#include "tdsce/numerics/kernels.hpp"
#include "tdsce/numerics/least_squares.hpp"
#include "tdsce/signal/pn.hpp"

namespace tdsce {
namespace {

CVec random_vec(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    CVec v(n);
    for (auto& x : v) x = cplx(g(rng), g(rng));
    return v;
}

double rel(const CVec& a, const CVec& b) {
    double num = 0, den = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        num += std::norm(a[k] - b[k]);
        den += std::norm(b[k]);
    }
    return std::sqrt(num / den);
}

bool check_pn() {
    for (int d = 3; d <= 10; ++d) {
        const auto gen = default_generator((std::size_t{1} << d) - 1);
        const auto bits = lfsr_period(gen);
        const std::size_t p = bits.size();
        for (std::size_t lag = 0; lag < p; ++lag) {
            long s = 0;
            for (std::size_t n = 0; n < p; ++n) s += (bits[n] == bits[(n + lag) % p]) ? 1 : -1;
            if (s != (lag == 0 ? static_cast<long>(p) : -1)) return false;
        }
    }
    return true;
}

bool check_fft() {
    std::mt19937_64 rng(1);
    for (std::size_t n : {16u, 255u}) {
        CVec x = random_vec(rng, n), ref(n);
        for (std::size_t k = 0; k < n; ++k) {
            cplx s = 0;
            for (std::size_t t = 0; t < n; ++t)
                s += x[t] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((k * t) % n) / static_cast<double>(n));
            ref[k] = s;
        }
        if (rel(fft(x), ref) > 1e-10) return false;
    }
    return true;
}

bool check_toeplitz() {
    std::mt19937_64 rng(2);
    CVec c = random_vec(rng, 64);
    auto phi = ToeplitzOperator::from_pn(c, 20);
    auto dense = phi.materialize();
    CVec x = random_vec(rng, 20);
    return rel(phi.apply(x), matvec(dense, x)) < 1e-10 &&
           rel(phi.apply_adjoint(phi.apply(x)), matvec_adjoint(dense, matvec(dense, x))) < 1e-10;
}

bool check_kernels() {
    const auto* v = kernels::avx2();
    if (!v) return true;
    std::mt19937_64 rng(3);
    CVec a = random_vec(rng, 37), b = random_vec(rng, 37), o1(37), o2(37);
    kernels::scalar().mul(a.data(), b.data(), o1.data(), 37);
    v->mul(a.data(), b.data(), o2.data(), 37);
    return o1 == o2;
}

bool check_noiseless_recovery() {
    const std::size_t M = 255;
    const auto pn = generate_pn(M, default_generator(M)).chips();
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t L = 40;
        CVec h(L, cplx(0, 0));
        Support D{0, 3, 17, 39};
        for (auto d : D) h[d] = random_vec(rng, 1)[0];
        Measurement meas{CVec{}, ToeplitzOperator::from_pn(pn, L), 2, false};
        meas.y_bar = meas.phi.apply(h);
        CoarsePriors p;
        p.D0 = D;
        p.S0 = p.S = D.size();
        p.L_hat = L;
        p.G_hat = M - L + 1;
        p.h_bar_prime.assign(M, cplx(0, 0));
        for (auto d : D) p.h_bar_prime[d] = h[d];
        auto det = pa_iht(meas, p);
        auto est = refine_detection(meas, det, M);
        CVec hd(M, cplx(0, 0));
        std::copy(h.begin(), h.end(), hd.begin());
        if (rel(est.dense, hd) > 1e-8) return false;
    }
    return true;
}

bool check_determinism() {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::MseVsSnr;
    cfg.profile = "itu_vb";
    cfg.trials = 3;
    cfg.snr_grid_db = {20.0};
    cfg.estimators = {"pa_iht", "cosamp", "crlb"};
    cfg.static_R_g1 = 3;
    cfg.threads = 2;
    const Scenario sc = make_scenario(cfg);
    return to_csv(run_experiment(sc)) == to_csv(run_experiment(sc));
}

}  // namespace

int run_selftest(std::ostream& out) {
    const std::vector<std::pair<std::string, std::function<bool()>>> checks{
        {"pn periodic autocorrelation", check_pn},
        {"fft against direct dft", check_fft},
        {"toeplitz against dense product", check_toeplitz},
        {"simd kernel equivalence", check_kernels},
        {"noiseless pa-iht recovery", check_noiseless_recovery},
        {"deterministic csv", check_determinism},
    };
    int failures = 0;
    for (const auto& [name, fn] : checks) {
        bool ok = false;
        std::string err;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            err = e.what();
        }
        out << (ok ? "PASS " : "FAIL ") << name << (err.empty() ? "" : " (" + err + ")") << "\n";
        failures += ok ? 0 : 1;
    }
    out << "kernel table: " << kernels::active().isa << "\n";
    return failures;
}

}  // namespace tdsce
