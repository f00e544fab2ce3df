#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tdsce/numerics/correlate.hpp"
#include "tdsce/numerics/fft.hpp"
#include "tdsce/numerics/kernels.hpp"
#include "tdsce/numerics/least_squares.hpp"
#include "tdsce/numerics/select.hpp"
#include "tdsce/numerics/toeplitz.hpp"

using namespace tdsce;

TEST_CASE("fft matches direct dft for power-of-two and odd lengths") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {1u, 2u, 8u, 64u, 255u, 256u, 7u, 100u}) {
        CVec x = oracle::random_cvec(rng, n);
        CHECK(oracle::rel_err(fft(x), oracle::dft(x)) < 1e-12);
        CHECK(oracle::rel_err(ifft(x), oracle::dft(x, true)) < 1e-12);
        CHECK(oracle::rel_err(ifft(fft(x)), x) < 1e-12);
    }
}

TEST_CASE("fft of a unit impulse is flat") {
    CVec x(16, cplx(0, 0));
    x[0] = 1;
    for (const auto& v : fft(x)) CHECK(std::abs(v - cplx(1, 0)) < 1e-15);
}

TEST_CASE("fft counts radix-2 butterflies") {
    OpCounter ops;
    CVec x(256, cplx(1, 0));
    fft(x, &ops);
    CHECK(ops.mults == 128u * 8u);
    CHECK_THROWS_WITH(fft(CVec{}), "empty vector");
}

TEST_CASE("circular correlation matches the direct sum") {
    std::mt19937_64 rng(3);
    for (std::size_t m : {7u, 255u, 256u}) {
        CVec c = oracle::random_cvec(rng, m), r = oracle::random_cvec(rng, m);
        CHECK(oracle::rel_err(circular_correlate(c, r), oracle::circ_corr(c, r)) < 1e-11);
    }
    CHECK_THROWS_WITH(circular_correlate(CVec(4), CVec(5)), "dimension mismatch");
}

TEST_CASE("toeplitz apply and adjoint match the dense matrix") {
    std::mt19937_64 rng(5);
    for (std::size_t L : {1u, 3u, 60u, 152u, 255u}) {
        CVec c = oracle::random_cvec(rng, 255);
        auto phi = ToeplitzOperator::from_pn(c, L);
        auto dense = oracle::pn_matrix(c, L);
        CHECK(phi.rows() == 255 - L + 1);
        CHECK(phi.cols() == L);
        CVec x = oracle::random_cvec(rng, L);
        CVec y = oracle::random_cvec(rng, phi.rows());
        CHECK(oracle::rel_err(phi.apply(x), oracle::dense_apply(dense, x)) < 1e-11);
        CHECK(oracle::rel_err(phi.apply_adjoint(y), oracle::dense_adjoint(dense, y)) < 1e-11);
    }
    CHECK_THROWS_WITH(ToeplitzOperator::from_pn(CVec(8), 9), "guard violated");
}

TEST_CASE("sparse toeplitz apply takes the direct path and is charged per column") {
    std::mt19937_64 rng(15);
    CVec c = oracle::random_cvec(rng, 255);
    auto phi = ToeplitzOperator::from_pn(c, 152);
    auto dense = oracle::pn_matrix(c, 152);
    CVec x(152, cplx(0, 0));
    x[0] = {1, 2};
    x[67] = {-0.5, 0};
    x[151] = {0, 0.3};
    OpCounter ops;
    CHECK(oracle::rel_err(phi.apply(x, &ops), oracle::dense_apply(dense, x)) < 1e-13);
    CHECK(ops.mults == 3u * phi.rows());

    OpCounter dense_ops;
    CVec full = oracle::random_cvec(rng, 152);
    phi.apply(full, &dense_ops);
    CHECK(dense_ops.mults == phi.apply_cost());
}

TEST_CASE("general toeplitz with distinct first row and column") {
    std::mt19937_64 rng(6);
    CVec col = oracle::random_cvec(rng, 9), row = oracle::random_cvec(rng, 4);
    ToeplitzOperator t(col, row);
    auto dense = t.materialize();
    CHECK(dense(0, 3) == row[3]);
    CHECK(dense(5, 0) == col[5]);
    CHECK(dense(6, 2) == col[4]);
    CVec x = oracle::random_cvec(rng, 4);
    CHECK(oracle::rel_err(t.apply(x), oracle::dense_apply(dense, x)) < 1e-12);
}

TEST_CASE("least squares agrees with normal equations") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        CMatrix a(12, 4);
        a.data = oracle::random_cvec(rng, 48);
        CVec y = oracle::random_cvec(rng, 12);
        auto sol = least_squares(a, y);
        CHECK(oracle::rel_err(sol.coeffs, oracle::normal_equations(a, y)) < 1e-10);
        CVec res = oracle::dense_apply(a, sol.coeffs);
        for (std::size_t i = 0; i < res.size(); ++i) res[i] = y[i] - res[i];
        CHECK(std::abs(norm(res) - sol.residual_norm) < 1e-10);
    }
}

TEST_CASE("least squares recovers an exact square system") {
    CMatrix a(2, 2);
    a(0, 0) = 1;
    a(1, 1) = 1;
    auto sol = least_squares(a, CVec{cplx(2, 0), cplx(3, 0)});
    CHECK(std::abs(sol.coeffs[0] - cplx(2, 0)) < 1e-14);
    CHECK(std::abs(sol.coeffs[1] - cplx(3, 0)) < 1e-14);
}

TEST_CASE("least squares rank handling") {
    CMatrix a(5, 3);
    for (std::size_t i = 0; i < 5; ++i) {
        a(i, 0) = cplx(double(i + 1), 0);
        a(i, 1) = cplx(double(i * i), 1);
        a(i, 2) = 2.0 * a(i, 0);
    }
    CVec y(5, cplx(1, 0));
    CHECK_THROWS_WITH(least_squares(a, y), "singular system");
    auto sol = least_squares(a, y, nullptr, {.drop_dependent = true});
    CHECK(sol.kept[0]);
    CHECK(sol.kept[1]);
    CHECK_FALSE(sol.kept[2]);
    CHECK(sol.coeffs[2] == cplx(0, 0));
    CHECK_THROWS_WITH(least_squares(a, CVec(4)), "dimension mismatch");
}

TEST_CASE("top-k support") {
    CVec x{cplx(0.1, 0), cplx(-3, 0), cplx(0, 2), cplx(0.5, 0)};
    CHECK(top_k_support(x, 2) == Support{1, 2});
    CHECK(top_k_support(x, 9) == Support{0, 1, 2, 3});
    CVec tie{cplx(1, 0), cplx(0, 1), cplx(-1, 0)};
    CHECK(top_k_support(tie, 2) == Support{0, 1});
    CHECK_THROWS_WITH(top_k_support(CVec{}, 1), "empty vector");

    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        CVec v = oracle::random_cvec(rng, 40);
        std::vector<std::size_t> idx(40);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](auto a, auto b) { return std::norm(v[a]) > std::norm(v[b]); });
        idx.resize(7);
        std::sort(idx.begin(), idx.end());
        CHECK(top_k_support(v, 7) == idx);
    }
}

TEST_CASE("kernel tables agree") {
    const auto* vec = kernels::avx2();
    if (!vec) {
        MESSAGE("avx2 unavailable, scalar only");
        return;
    }
    const auto& ref = kernels::scalar();
    std::mt19937_64 rng(21);
    for (std::size_t n : {0u, 1u, 2u, 3u, 17u, 256u}) {
        CVec a = oracle::random_cvec(rng, n), b = oracle::random_cvec(rng, n);
        CVec o1(n), o2(n);
        ref.mul(a.data(), b.data(), o1.data(), n);
        vec->mul(a.data(), b.data(), o2.data(), n);
        CHECK(o1 == o2);
        ref.mul_conj(a.data(), b.data(), o1.data(), n);
        vec->mul_conj(a.data(), b.data(), o2.data(), n);
        CHECK(o1 == o2);
        CVec y1 = b, y2 = b;
        ref.axpy(cplx(0.3, -1.2), a.data(), y1.data(), n);
        vec->axpy(cplx(0.3, -1.2), a.data(), y2.data(), n);
        CHECK(y1 == y2);
        CVec l1 = a, h1 = b, l2 = a, h2 = b;
        CVec w = oracle::random_cvec(rng, n);
        ref.butterfly(l1.data(), h1.data(), w.data(), n);
        vec->butterfly(l2.data(), h2.data(), w.data(), n);
        CHECK(l1 == l2);
        CHECK(h1 == h2);
        CVec s1 = a, s2 = a;
        ref.scale(0.7, s1.data(), n);
        vec->scale(0.7, s2.data(), n);
        CHECK(s1 == s2);
        const cplx d1 = ref.dot_conj(a.data(), b.data(), n), d2 = vec->dot_conj(a.data(), b.data(), n);
        CHECK(std::abs(d1 - d2) <= 1e-12 * (1.0 + std::abs(d1)));
        const double q1 = ref.norm2(a.data(), n), q2 = vec->norm2(a.data(), n);
        CHECK(std::abs(q1 - q2) <= 1e-12 * (1.0 + q1));
    }
}
