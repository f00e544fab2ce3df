// Built with -mavx2 only. No FMA, so elementwise results match the scalar path bit for bit.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace tdsce::kernels {
namespace {

// Two complex values per register: [re0 im0 re1 im1].
inline __m256d cmul2(__m256d a, __m256d b) {
    const __m256d br = _mm256_movedup_pd(b);
    const __m256d bi = _mm256_permute_pd(b, 0xF);
    const __m256d as = _mm256_permute_pd(a, 0x5);
    return _mm256_addsub_pd(_mm256_mul_pd(a, br), _mm256_mul_pd(as, bi));
}

// conj(a) * b
inline __m256d cmulc2(__m256d a, __m256d b) {
    const __m256d ar = _mm256_movedup_pd(a);
    const __m256d ai = _mm256_permute_pd(a, 0xF);
    const __m256d bs = _mm256_permute_pd(b, 0x5);
    // [ar*br + ai*bi, ar*bi - ai*br]
    const __m256d t1 = _mm256_mul_pd(ar, b);
    const __m256d t2 = _mm256_mul_pd(ai, bs);
    const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    return _mm256_add_pd(t1, _mm256_xor_pd(t2, sign));
}

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

void mul_avx(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) store2(out + i, cmul2(load2(a + i), load2(b + i)));
    if (i < n) scalar().mul(a + i, b + i, out + i, n - i);
}

void mul_conj_avx(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) store2(out + i, cmulc2(load2(a + i), load2(b + i)));
    if (i < n) scalar().mul_conj(a + i, b + i, out + i, n - i);
}

cplx dot_conj_avx(const cplx* a, const cplx* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, cmulc2(load2(a + i), load2(b + i)));
        acc1 = _mm256_add_pd(acc1, cmulc2(load2(a + i + 2), load2(b + i + 2)));
    }
    for (; i + 2 <= n; i += 2) acc0 = _mm256_add_pd(acc0, cmulc2(load2(a + i), load2(b + i)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    cplx s(lanes[0] + lanes[2], lanes[1] + lanes[3]);
    if (i < n) s += scalar().dot_conj(a + i, b + i, n - i);
    return s;
}

double norm2_avx(const cplx* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = load2(a + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    if (i < n) s += scalar().norm2(a + i, n - i);
    return s;
}

void axpy_avx(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const __m256d al = _mm256_set_pd(alpha.imag(), alpha.real(), alpha.imag(), alpha.real());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) store2(y + i, _mm256_add_pd(load2(y + i), cmul2(load2(x + i), al)));
    if (i < n) scalar().axpy(alpha, x + i, y + i, n - i);
}

void butterfly_avx(cplx* lo, cplx* hi, const cplx* w, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d t = cmul2(load2(hi + i), load2(w + i));
        const __m256d l = load2(lo + i);
        store2(hi + i, _mm256_sub_pd(l, t));
        store2(lo + i, _mm256_add_pd(l, t));
    }
    if (i < n) scalar().butterfly(lo + i, hi + i, w + i, n - i);
}

void scale_avx(double s, cplx* x, std::size_t n) {
    const __m256d sv = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) store2(x + i, _mm256_mul_pd(load2(x + i), sv));
    if (i < n) scalar().scale(s, x + i, n - i);
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{"avx2", mul_avx, mul_conj_avx, dot_conj_avx, norm2_avx,
                               axpy_avx, butterfly_avx, scale_avx};
    return t;
}

}  // namespace tdsce::kernels
