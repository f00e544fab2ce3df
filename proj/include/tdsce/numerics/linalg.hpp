#pragma once

#include <span>

#include "tdsce/numerics/types.hpp"

namespace tdsce {

/// sum conj(a[i]) * b[i]
cplx dot(std::span<const cplx> a, std::span<const cplx> b, OpCounter* ops = nullptr);
double norm2(std::span<const cplx> a, OpCounter* ops = nullptr);
double norm(std::span<const cplx> a, OpCounter* ops = nullptr);

/// a - b
CVec sub(std::span<const cplx> a, std::span<const cplx> b);

/// |x|^2 per entry.
RVec magnitudes2(std::span<const cplx> x);

/// Dense column-major matrix, small and only used where sizes are modest.
struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    CVec data;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, cplx(0.0, 0.0)) {}

    cplx& operator()(std::size_t r, std::size_t c) { return data[c * rows + r]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data[c * rows + r]; }
    std::span<cplx> col(std::size_t c) { return {data.data() + c * rows, rows}; }
    std::span<const cplx> col(std::size_t c) const { return {data.data() + c * rows, rows}; }
};

CVec matvec(const CMatrix& a, std::span<const cplx> x);
CVec matvec_adjoint(const CMatrix& a, std::span<const cplx> y);

}  // namespace tdsce
