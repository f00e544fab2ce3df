#include "kernels_impl.hpp"

namespace tdsce::kernels {
namespace {

void mul_ref(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        out[i] = cplx(ar * br - ai * bi, ai * br + ar * bi);
    }
}

void mul_conj_ref(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        out[i] = cplx(ar * br + ai * bi, ar * bi - ai * br);
    }
}

cplx dot_conj_ref(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm2_ref(const cplx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return s;
}

void axpy_ref(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double cr = alpha.real(), ci = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = cplx(y[i].real() + (xr * cr - xi * ci), y[i].imag() + (xi * cr + xr * ci));
    }
}

void butterfly_ref(cplx* lo, cplx* hi, const cplx* w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double hr = hi[i].real(), hii = hi[i].imag();
        const double wr = w[i].real(), wi = w[i].imag();
        const double tr = hr * wr - hii * wi;
        const double ti = hii * wr + hr * wi;
        const double lr = lo[i].real(), li = lo[i].imag();
        hi[i] = cplx(lr - tr, li - ti);
        lo[i] = cplx(lr + tr, li + ti);
    }
}

void scale_ref(double s, cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] = cplx(x[i].real() * s, x[i].imag() * s);
}

}  // namespace

const KernelTable& scalar() {
    static const KernelTable t{"scalar", mul_ref, mul_conj_ref, dot_conj_ref, norm2_ref,
                               axpy_ref, butterfly_ref, scale_ref};
    return t;
}

}  // namespace tdsce::kernels
