#include "tdsce/numerics/linalg.hpp"

#include <cmath>

#include "tdsce/numerics/kernels.hpp"

namespace tdsce {

cplx dot(std::span<const cplx> a, std::span<const cplx> b, OpCounter* ops) {
    if (a.size() != b.size()) throw Error("dimension mismatch");
    count_mul(ops, a.size());
    return kernels::active().dot_conj(a.data(), b.data(), a.size());
}

double norm2(std::span<const cplx> a, OpCounter* ops) {
    count_mul(ops, a.size());
    return kernels::active().norm2(a.data(), a.size());
}

double norm(std::span<const cplx> a, OpCounter* ops) { return std::sqrt(norm2(a, ops)); }

CVec sub(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw Error("dimension mismatch");
    CVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RVec magnitudes2(std::span<const cplx> x) {
    RVec m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) m[i] = std::norm(x[i]);
    return m;
}

CVec matvec(const CMatrix& a, std::span<const cplx> x) {
    if (x.size() != a.cols) throw Error("dimension mismatch");
    CVec y(a.rows, cplx(0.0, 0.0));
    for (std::size_t c = 0; c < a.cols; ++c) {
        if (x[c] == cplx(0.0, 0.0)) continue;
        kernels::active().axpy(x[c], a.col(c).data(), y.data(), a.rows);
    }
    return y;
}

CVec matvec_adjoint(const CMatrix& a, std::span<const cplx> y) {
    if (y.size() != a.rows) throw Error("dimension mismatch");
    CVec x(a.cols);
    for (std::size_t c = 0; c < a.cols; ++c) x[c] = kernels::active().dot_conj(a.col(c).data(), y.data(), a.rows);
    return x;
}

}  // namespace tdsce
