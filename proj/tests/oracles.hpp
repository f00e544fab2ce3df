#pragma once

// Brute-force reference computations used by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "tdsce/numerics/linalg.hpp"
#include "tdsce/numerics/types.hpp"

namespace oracle {

using tdsce::cplx;
using tdsce::CVec;

inline CVec dft(const CVec& x, bool inverse = false) {
    const std::size_t n = x.size();
    CVec out(n);
    const double sgn = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        long double re = 0, im = 0;
        for (std::size_t t = 0; t < n; ++t) {
            const long double ang =
                sgn * 2.0L * std::numbers::pi_v<long double> * static_cast<long double>((k * t) % n) / n;
            re += x[t].real() * std::cos(ang) - x[t].imag() * std::sin(ang);
            im += x[t].real() * std::sin(ang) + x[t].imag() * std::cos(ang);
        }
        out[k] = cplx(static_cast<double>(re), static_cast<double>(im));
        if (inverse) out[k] /= static_cast<double>(n);
    }
    return out;
}

inline CVec circ_corr(const CVec& c, const CVec& r) {
    const std::size_t m = c.size();
    CVec u(m);
    for (std::size_t l = 0; l < m; ++l) {
        cplx s = 0;
        for (std::size_t k = 0; k < m; ++k) s += std::conj(c[k]) * r[(k + l) % m];
        u[l] = s;
    }
    return u;
}

inline CVec linear_conv(const CVec& a, const CVec& b) {
    CVec out(a.size() + b.size() - 1, cplx(0, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Dense Phi[i][j] = c[L-1+i-j].
inline tdsce::CMatrix pn_matrix(const CVec& c, std::size_t L) {
    const std::size_t g = c.size() - L + 1;
    tdsce::CMatrix a(g, L);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < L; ++j) a(i, j) = c[L - 1 + i - j];
    return a;
}

inline CVec dense_apply(const tdsce::CMatrix& a, const CVec& x) {
    CVec y(a.rows, cplx(0, 0));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) y[i] += a(i, j) * x[j];
    return y;
}

inline CVec dense_adjoint(const tdsce::CMatrix& a, const CVec& y) {
    CVec x(a.cols, cplx(0, 0));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) x[j] += std::conj(a(i, j)) * y[i];
    return x;
}

/// Gaussian elimination with partial pivoting on a square system.
inline CVec solve(std::vector<CVec> m, CVec b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const cplx f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            b[r] -= f * b[c];
        }
    }
    CVec x(n);
    for (std::size_t r = n; r-- > 0;) {
        cplx s = b[r];
        for (std::size_t k = r + 1; k < n; ++k) s -= m[r][k] * x[k];
        x[r] = s / m[r][r];
    }
    return x;
}

/// Least squares via the normal equations (A^H A) x = A^H y.
inline CVec normal_equations(const tdsce::CMatrix& a, const CVec& y) {
    std::vector<CVec> g(a.cols, CVec(a.cols, cplx(0, 0)));
    CVec rhs(a.cols, cplx(0, 0));
    for (std::size_t i = 0; i < a.cols; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j)
            for (std::size_t r = 0; r < a.rows; ++r) g[i][j] += std::conj(a(r, i)) * a(r, j);
        for (std::size_t r = 0; r < a.rows; ++r) rhs[i] += std::conj(a(r, i)) * y[r];
    }
    return solve(g, rhs);
}

inline double max_abs_diff(const CVec& a, const CVec& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double rel_err(const CVec& got, const CVec& want) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::norm(got[i] - want[i]);
        den += std::norm(want[i]);
    }
    return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

inline CVec random_cvec(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVec v(n);
    for (auto& x : v) x = cplx(g(rng), g(rng));
    return v;
}

/// argmin over |D| <= S of ||y - A_D g_D|| with gains fixed to g. Ties keep the first subset found,
/// smaller subsets first and lexicographic within a size.
inline std::vector<std::size_t> exhaustive_support(const tdsce::CMatrix& a, const CVec& y, const CVec& g,
                                                   std::size_t S) {
    const std::size_t L = a.cols;
    std::vector<std::size_t> best;
    double best_r = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= std::min(S, L); ++k) {
        std::vector<bool> pick(L, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            CVec r = y;
            std::vector<std::size_t> d;
            for (std::size_t j = 0; j < L; ++j) {
                if (!pick[j]) continue;
                d.push_back(j);
                for (std::size_t i = 0; i < a.rows; ++i) r[i] -= a(i, j) * g[j];
            }
            double n = 0;
            for (const auto& v : r) n += std::norm(v);
            if (n < best_r * (1 - 1e-12)) {
                best_r = n;
                best = d;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return best;
}

/// Maximal-length LFSR sequence by brute force over the recurrence s[n+d] = xor of taps.
inline std::vector<int> msequence_bits(int degree, const std::vector<int>& taps, unsigned seed) {
    const std::size_t period = (std::size_t{1} << degree) - 1;
    std::vector<int> s(period + degree);
    for (int b = 0; b < degree; ++b) s[b] = (seed >> b) & 1;
    // Feedback polynomial x^d + sum x^{d-t}: s[n+d] = xor_t s[n+d-t].
    for (std::size_t n = degree; n < s.size(); ++n) {
        int v = 0;
        for (int t : taps) v ^= s[n - t];
        s[n] = v;
    }
    s.resize(period);
    return s;
}

}  // namespace oracle
