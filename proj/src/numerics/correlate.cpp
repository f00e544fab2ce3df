#include "tdsce/numerics/correlate.hpp"

#include "tdsce/numerics/fft.hpp"
#include "tdsce/numerics/kernels.hpp"

namespace tdsce {

CircularCorrelator::CircularCorrelator(std::span<const cplx> c) {
    if (c.empty()) throw Error("empty vector");
    spectrum_ = fft(c);
}

CVec CircularCorrelator::operator()(std::span<const cplx> r, OpCounter* ops) const {
    if (r.size() != spectrum_.size()) throw Error("dimension mismatch");
    CVec rf = fft(r, ops);
    kernels::active().mul_conj(spectrum_.data(), rf.data(), rf.data(), rf.size());
    count_mul(ops, rf.size());
    fft_inplace(rf, FftDirection::Inverse, ops);
    return rf;
}

CVec circular_correlate(std::span<const cplx> c, std::span<const cplx> r, OpCounter* ops) {
    if (c.empty() || r.empty()) throw Error("empty vector");
    if (c.size() != r.size()) throw Error("dimension mismatch");
    CircularCorrelator corr(c);
    count_mul(ops, fft_mult_count(c.size()));
    return corr(r, ops);
}

}  // namespace tdsce
