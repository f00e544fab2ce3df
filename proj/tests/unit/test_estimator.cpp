#include <doctest.h>

#include <random>

#include "instances.hpp"
#include "oracles.hpp"
#include "tdsce/estimator/baselines.hpp"
#include "tdsce/estimator/coarse.hpp"
#include "tdsce/estimator/dpn.hpp"
#include "tdsce/estimator/measurement.hpp"
#include "tdsce/estimator/pa_iht.hpp"
#include "tdsce/estimator/pipeline.hpp"

using namespace tdsce;
using fixture::cir;
using fixture::make_burst;

namespace {

const CoherenceParams kOne{1, 1, 1, 0.0};

CVec circular_conv(const CVec& c, const CVec& h) {
    CVec r(c.size(), cplx(0, 0));
    for (std::size_t n = 0; n < c.size(); ++n)
        for (std::size_t t = 0; t < h.size(); ++t) r[(n + t) % c.size()] += c[n] * h[t];
    return r;
}

}  // namespace

TEST_CASE("overlap-add of an isolated PN is the circular convolution") {
    const auto h = cir({{0, {0.9, 0.1}}, {4, {0, -0.6}}, {30, {0.3, 0.3}}});
    const auto b = make_burst(63, 128, 3, h, false, INFINITY, 1, true);
    const CVec r = overlap_add_ts(*b.rx, 1, 63);
    CHECK(oracle::max_abs_diff(r, circular_conv(b.c, h.dense(63))) < 1e-12);
    CHECK_THROWS_WITH(b.rx->window(b.rx->samples().size(), 1), "stream too short");
}

TEST_CASE("threshold level and path detection") {
    const RVec v{10, 1, 1, 1, 1};
    CHECK(threshold_level(v, {}) == doctest::Approx(3 * 1.4826));
    CHECK(detect_paths(v, threshold_level(v, {})) == Support{0});
    const RVec flat{1, 1, 1, 1};
    // Median term dominates: nothing clears 3 * 1.4826.
    CHECK_THROWS_WITH(detect_paths(flat, threshold_level(flat, {})), "no paths detected");
    ThresholdRule rel{0.0, 0.5, 0};
    CHECK(threshold_level(v, rel) == doctest::Approx(5.0));
}

TEST_CASE("size_priors applies the length margin and sparsity slack") {
    CoarseSettings s;
    s.b = 2;
    CoarsePriors p;
    p.D0 = {0, 2, 5};
    size_priors(p, 255, s, std::nullopt);
    CHECK(p.a == 1);
    CHECK(p.L_hat == 6);
    CHECK(p.G_hat == 250);
    CHECK(p.S0 == 3);
    CHECK(p.S == 5);
    CHECK(p.G_hat + p.L_hat == 256);

    p.D0 = {3, 100};
    size_priors(p, 255, s, std::nullopt);
    CHECK(p.a == 10);
    CHECK(p.L_hat == 110);

    p.D0 = {250};
    size_priors(p, 255, s, std::nullopt);
    CHECK(p.L_hat == 255);
    CHECK(p.guard_limited);

    p = {};
    p.D0 = {3, 40};
    size_priors(p, 255, s, std::size_t{30});
    CHECK(p.D0 == Support{3});
    CHECK(p.L_hat == 30);
    CHECK(p.S == 3);

    p.D0 = {0};
    s.a = 4;
    size_priors(p, 255, s, std::nullopt);
    CHECK(p.L_hat == 4);
    s.b = -1;
    CHECK_THROWS_WITH(size_priors(p, 255, s, std::nullopt), "b must be nonnegative");
}

TEST_CASE("coarse acquisition finds the taps of a clean channel") {
    const auto h = cir({{0, {1.0, 0}}, {2, {0, 0.8}}, {5, {-0.5, 0}}});
    const auto b = make_burst(255, 2048, 4, h, false, 30.0, 7);
    CoarseSettings s;
    s.a = 1;
    const auto p = coarse_delays(*b.rx, b.c, kOne, 1, s);
    CHECK(p.D0 == Support{0, 2, 5});
    CHECK(p.L_hat == 6);
    CHECK(p.S == 5);
    const CVec g = coarse_gains(*b.rx, b.c, kOne, 1, p.L_hat);
    for (const auto& t : h.taps) CHECK(std::abs(g[t.delay] - t.gain) < 0.15);
}

TEST_CASE("IBI-free measurement equals Phi h") {
    const auto h = cir({{0, {0.5, 0.2}}, {7, {1.0, 0}}, {40, {0, -0.4}}});
    const auto b = make_burst(127, 512, 5, h, false, INFINITY, 3);
    for (std::size_t L : {41u, 60u, 127u}) {
        const auto m = build_measurement(*b.rx, b.c, L, 3, 2, 2);
        CHECK(m.averaged_over == 4);
        CHECK(m.G_hat() == 128 - L);
        const CVec want = oracle::dense_apply(oracle::pn_matrix(b.c, L), h.dense(L));
        CHECK(oracle::rel_err(m.y_bar, want) < 1e-12);
    }
    CHECK(build_measurement(*b.rx, b.c, 127, 3, 1, 1).under_observed);
    CHECK_THROWS_WITH(build_measurement(*b.rx, b.c, 41, 3, 3, 1), "stream too short");
}

TEST_CASE("pa_iht with exact priors stops at the truth") {
    std::mt19937_64 rng(1);
    auto in = fixture::make_support_instance(rng, 63);
    in.priors.D0 = in.truth;
    in.priors.S = in.truth.size();
    for (std::size_t t = 0; t < in.h.size(); ++t) in.priors.h_bar_prime[t] = in.h[t];
    const auto e = pa_iht(in.meas, in.priors);
    CHECK(e.support == in.truth);
    CHECK(e.iterations_used == 0);
    CHECK(e.residuals.size() == 1);
    CHECK(e.residuals[0] < 1e-12);
}

TEST_CASE("pa_iht residuals decrease and gains come from the priors") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        auto in = fixture::make_support_instance(rng, 31);
        const auto e = pa_iht(in.meas, in.priors);
        for (std::size_t k = 1; k < e.residuals.size(); ++k) CHECK(e.residuals[k] < e.residuals[k - 1]);
        CHECK(e.support.size() <= in.priors.S);
        for (std::size_t k = 0; k < e.support.size(); ++k)
            CHECK(e.gains[k] == in.priors.h_bar_prime[e.support[k]]);
        CHECK(e.ops.mults > 0);
    }
}

TEST_CASE("pa_iht matches exhaustive support search on small instances") {
    std::mt19937_64 rng(5);
    int agree = 0;
    const int n = 100;
    for (int rep = 0; rep < n; ++rep) {
        const auto in = fixture::make_support_instance(rng, 16);
        const auto e = pa_iht(in.meas, in.priors);
        const CVec g(in.priors.h_bar_prime.begin(),
                     in.priors.h_bar_prime.begin() + static_cast<std::ptrdiff_t>(in.h.size()));
        const auto want = oracle::exhaustive_support(in.meas.phi.materialize(), in.meas.y_bar, g, in.priors.S);
        agree += e.support == want;
    }
    CHECK(agree >= 90);
}

TEST_CASE("ml_refine matches the normal equations") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        auto in = fixture::make_support_instance(rng, 63);
        for (auto& v : in.meas.y_bar) v += 0.05 * oracle::random_cvec(rng, 1)[0];
        Support D = in.truth;
        D.push_back(in.h.size() - 1);
        std::sort(D.begin(), D.end());
        D.erase(std::unique(D.begin(), D.end()), D.end());
        OpCounter ops;
        const auto e = ml_refine(in.meas, D, 63, &ops);
        const CVec want = oracle::normal_equations(in.meas.phi.columns(D), in.meas.y_bar);
        CHECK(e.support == D);
        CHECK(oracle::rel_err(e.gains, want) < 1e-9);
        CHECK(ops.mults > 0);
    }
}

TEST_CASE("ml_refine zeroes a spurious index in the noiseless case") {
    std::mt19937_64 rng(12);
    auto in = fixture::make_support_instance(rng, 63);
    Support D = in.truth;
    std::size_t extra = 0;
    while (std::binary_search(D.begin(), D.end(), extra)) ++extra;
    D.insert(std::upper_bound(D.begin(), D.end(), extra), extra);
    const auto e = ml_refine(in.meas, D, 63);
    for (std::size_t k = 0; k < D.size(); ++k) CHECK(std::abs(e.gains[k] - in.h[D[k]]) < 1e-10);
}

TEST_CASE("ml_refine rejects rank-deficient supports and the pipeline falls back") {
    const CVec c = generate_pn(15, default_generator(15)).chips();
    Measurement m{CVec{cplx(1, 0)}, ToeplitzOperator::from_pn(c, 15), 2, true};
    CHECK_THROWS_WITH(ml_refine(m, Support{0, 1}, 15), "singular support");
    ChannelEstimate det = estimate_from_coeffs(CVec{cplx(0.1, 0), cplx(2, 0)}, 15);
    const auto r = refine_detection(m, det, 15);
    CHECK(r.support == Support{1});
    CHECK(r.under_observed);
}

TEST_CASE("crlb closed form") {
    CHECK(crlb(6, 104, 1, 10) == doctest::Approx(6.0 / 2080.0));
    CHECK(crlb(6, 104, 1, 20) == doctest::Approx(crlb(6, 104, 1, 10) / 2));
    CHECK(crlb(6, 104, 40, 10) == doctest::Approx(crlb(6, 104, 1, 10) / 40));
    CHECK_THROWS(crlb(0, 104, 1, 10));
    CHECK_THROWS(crlb(6, 104, 1, -1));
}

TEST_CASE("classical IHT diverges on an unnormalised PN matrix") {
    std::mt19937_64 rng(2);
    const auto in = fixture::make_support_instance(rng, 255);
    const auto e = iht_classic(in.meas, in.priors.S, 255);
    CHECK(e.status == EstimateStatus::Diverged);
    for (const auto& v : e.dense) CHECK(std::isfinite(std::abs(v)));
    CHECK_THROWS_WITH(iht_classic(in.meas, 0, 255), "S must be positive");
}

TEST_CASE("cosamp recovers a noiseless sparse channel") {
    std::mt19937_64 rng(4);
    const CVec c = generate_pn(255, PnGenerator{}).chips();
    const std::size_t L = 60;
    CVec h(L, cplx(0, 0));
    h[3] = {1, 0.5};
    h[20] = {0, -0.7};
    h[41] = {0.4, 0};
    h[59] = {-0.3, 0.3};
    auto phi = ToeplitzOperator::from_pn(c, L);
    Measurement m{phi.apply(h), phi, 2, false};
    const auto e = cosamp(m, 4, 255);
    CHECK(e.support == Support{3, 20, 41, 59});
    CHECK(oracle::rel_err(CVec(e.dense.begin(), e.dense.begin() + L), h) < 1e-10);

    const auto w = cosamp(m, 4, 255, Support{3, 20, 41, 59});
    CHECK(w.iterations_used == 0);
    CHECK(w.support == e.support);
}

TEST_CASE("dpn correlation reproduces the PN autocorrelation smear") {
    const auto h = cir({{0, {1.0, 0}}, {9, {0, 0.5}}, {100, {-0.3, 0.2}}});
    const auto b = make_burst(255, 2048, 3, h, true, INFINITY, 6);
    const auto d = dpn_estimate(*b.rx, b.c, 1, 2);
    const CVec hd = h.dense(255);
    cplx sum = 0;
    for (const auto& v : hd) sum += v;
    for (std::size_t l = 0; l < 255; ++l) {
        const cplx want = (256.0 * hd[l] - sum) / 255.0;
        CHECK(std::abs(d.raw[l] - want) < 1e-12);
    }
    CHECK(d.taps.support == Support{0, 9, 100});

    const auto single = make_burst(255, 2048, 3, h, false, INFINITY, 6);
    CHECK_THROWS_WITH(dpn_estimate(*single.rx, single.c, 1, 1), "dual PN framing required");
}

TEST_CASE("dpn raw estimate is unbiased up to the sidelobe term") {
    const auto h = cir({{0, {1.0, 0}}, {30, {0.5, -0.5}}});
    const CVec hd = h.dense(255);
    CVec acc(255, cplx(0, 0));
    const int runs = 40;
    for (int r = 0; r < runs; ++r) {
        const auto b = make_burst(255, 2048, 3, h, true, 5.0, 100 + r);
        const auto d = dpn_estimate(*b.rx, b.c, 1, 1);
        for (std::size_t l = 0; l < 255; ++l) acc[l] += d.raw[l];
    }
    cplx sum = hd[0] + hd[30];
    for (std::size_t l : {0u, 30u, 77u}) {
        const cplx want = (256.0 * hd[l] - sum) / 255.0;
        CHECK(std::abs(acc[l] / double(runs) - want) < 0.03);
    }
}

TEST_CASE("end-to-end PA-IHT recovers a noiseless ITU-VB-like channel") {
    const auto h = cir({{0, {0.5, 0.3}}, {2, {0.9, -0.2}}, {67, {0.3, 0}}, {98, {0, 0.4}}, {129, {0.25, 0}},
                        {151, {0.3, 0.2}}});
    const auto b = make_burst(255, 2048, 10, h, false, INFINITY, 8);
    const CoherenceParams p{4, 7, 4, 0.0};
    const auto run = run_pa_iht(*b.rx, b.c, p, 4, {});
    REQUIRE(run.meas);
    CHECK(run.priors.L_hat >= 152);
    const CVec hd = h.dense(255);
    double num = 0, den = 0;
    for (std::size_t t = 0; t < 255; ++t) {
        num += std::norm(run.refined.dense[t] - hd[t]);
        den += std::norm(hd[t]);
    }
    CHECK(num / den < 1e-10);

    const auto mc = run_mcosamp(*b.rx, b.c, 4, {});
    CHECK(mc.meas->averaged_over == 2);
    CHECK(mc.estimate.iterations_used >= 1);
}
