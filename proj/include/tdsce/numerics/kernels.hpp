#pragma once

#include <cstddef>
#include <string_view>

#include "tdsce/numerics/types.hpp"

namespace tdsce::kernels {

/// Table of vector primitives. One scalar reference table, one AVX2 table.
struct KernelTable {
    std::string_view isa;
    // out[i] = a[i] * b[i]
    void (*mul)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
    // out[i] = conj(a[i]) * b[i]
    void (*mul_conj)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
    // sum conj(a[i]) * b[i]
    cplx (*dot_conj)(const cplx* a, const cplx* b, std::size_t n);
    // sum |a[i]|^2
    double (*norm2)(const cplx* a, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    // t = hi*w; hi = lo - t; lo = lo + t
    void (*butterfly)(cplx* lo, cplx* hi, const cplx* w, std::size_t n);
    // x[i] *= s
    void (*scale)(double s, cplx* x, std::size_t n);
};

const KernelTable& scalar();

/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2();

/// Active table. TDSCE_SIMD=scalar forces the reference path.
const KernelTable& active();

}  // namespace tdsce::kernels
