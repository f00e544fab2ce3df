#include "tdsce/numerics/least_squares.hpp"

#include <cmath>

#include "tdsce/numerics/kernels.hpp"

namespace tdsce {
namespace {

struct Reflector {
    std::size_t start;
    CVec v;  // unit vector on rows [start, rows)
};

// x <- (I - 2 v v^H) x on the reflector's rows.
void reflect(const Reflector& h, cplx* x, OpCounter* ops) {
    const auto& k = kernels::active();
    const std::size_t n = h.v.size();
    const cplx s = k.dot_conj(h.v.data(), x + h.start, n);
    k.axpy(-2.0 * s, h.v.data(), x + h.start, n);
    count_mul(ops, 2 * n);
}

}  // namespace

LsSolution least_squares(const CMatrix& a, std::span<const cplx> y, OpCounter* ops, LsOptions opt) {
    if (a.rows == 0 || a.cols == 0) throw Error("empty vector");
    if (y.size() != a.rows) throw Error("dimension mismatch");
    const std::size_t m = a.rows;
    const auto& k = kernels::active();

    std::vector<Reflector> refl;
    std::vector<std::size_t> order;  // accepted column indices
    CMatrix r(m, a.cols);            // transformed accepted columns

    for (std::size_t j = 0; j < a.cols; ++j) {
        CVec col(a.col(j).begin(), a.col(j).end());
        const double orig = std::sqrt(k.norm2(col.data(), m));
        count_mul(ops, m);
        for (const auto& h : refl) reflect(h, col.data(), ops);
        const std::size_t p = refl.size();
        const double rest = p < m ? std::sqrt(k.norm2(col.data() + p, m - p)) : 0.0;
        count_mul(ops, m - p);
        if (p >= m || rest <= opt.rank_tol * orig || orig == 0.0) {
            if (!opt.drop_dependent) throw Error("singular system");
            continue;
        }
        // Householder vector mapping col[p:] onto alpha e_1.
        const cplx x0 = col[p];
        const double ax0 = std::abs(x0);
        const cplx phase = ax0 > 0.0 ? x0 / ax0 : cplx(1.0, 0.0);
        const cplx alpha = -phase * rest;
        Reflector h{p, CVec(col.begin() + static_cast<std::ptrdiff_t>(p), col.end())};
        h.v[0] -= alpha;
        const double vn = std::sqrt(k.norm2(h.v.data(), h.v.size()));
        count_mul(ops, h.v.size());
        k.scale(1.0 / vn, h.v.data(), h.v.size());
        col[p] = alpha;
        for (std::size_t i = p + 1; i < m; ++i) col[i] = cplx(0.0, 0.0);
        std::copy(col.begin(), col.end(), r.col(order.size()).begin());
        refl.push_back(std::move(h));
        order.push_back(j);
    }

    CVec qy(y.begin(), y.end());
    for (const auto& h : refl) reflect(h, qy.data(), ops);

    const std::size_t n = order.size();
    CVec z(n);
    for (std::size_t ii = n; ii-- > 0;) {
        cplx s = qy[ii];
        for (std::size_t jj = ii + 1; jj < n; ++jj) s -= r(ii, jj) * z[jj];
        z[ii] = s / r(ii, ii);
        count_mul(ops, n - ii);
    }

    LsSolution out;
    out.coeffs.assign(a.cols, cplx(0.0, 0.0));
    out.kept.assign(a.cols, false);
    for (std::size_t t = 0; t < n; ++t) {
        out.coeffs[order[t]] = z[t];
        out.kept[order[t]] = true;
    }
    out.residual_norm = n < m ? std::sqrt(k.norm2(qy.data() + n, m - n)) : 0.0;
    return out;
}

}  // namespace tdsce
