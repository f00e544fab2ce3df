#include "tdsce/numerics/toeplitz.hpp"

#include "tdsce/numerics/fft.hpp"
#include "tdsce/numerics/kernels.hpp"

namespace tdsce {

ToeplitzOperator::ToeplitzOperator(CVec first_col, CVec first_row)
    : col_(std::move(first_col)), row_(std::move(first_row)) {
    if (col_.empty() || row_.empty()) throw Error("empty vector");
    row_[0] = col_[0];
    const std::size_t g = col_.size();
    const std::size_t l = row_.size();
    nfft_ = next_pow2(g + l - 1);

    // Forward kernel: k[m] = t_{m-(l-1)}.
    diag_.assign(g + l - 1, cplx(0.0, 0.0));
    for (std::size_t m = 0; m + 1 < l; ++m) diag_[m] = row_[l - 1 - m];
    for (std::size_t i = 0; i < g; ++i) diag_[l - 1 + i] = col_[i];
    fwd_.assign(nfft_, cplx(0.0, 0.0));
    std::copy(diag_.begin(), diag_.end(), fwd_.begin());
    // Adjoint kernel: k[m] = conj(t_{g-1-m}).
    adj_.assign(nfft_, cplx(0.0, 0.0));
    for (std::size_t m = 0; m < g; ++m) adj_[m] = std::conj(col_[g - 1 - m]);
    for (std::size_t j = 1; j < l; ++j) adj_[g - 1 + j] = std::conj(row_[j]);
    fft_inplace(fwd_, FftDirection::Forward);
    fft_inplace(adj_, FftDirection::Forward);
}

ToeplitzOperator ToeplitzOperator::from_pn(std::span<const cplx> c, std::size_t L) {
    const std::size_t m = c.size();
    if (m == 0) throw Error("empty vector");
    if (L == 0 || L > m) throw Error("guard violated");
    const std::size_t g = m - L + 1;
    CVec col(g), row(L);
    for (std::size_t i = 0; i < g; ++i) col[i] = c[L - 1 + i];
    for (std::size_t j = 0; j < L; ++j) row[j] = c[L - 1 - j];
    return ToeplitzOperator(std::move(col), std::move(row));
}

cplx ToeplitzOperator::at(std::size_t i, std::size_t j) const {
    return i >= j ? col_[i - j] : row_[j - i];
}

CVec ToeplitzOperator::column(std::size_t j) const {
    CVec c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = at(i, j);
    return c;
}

CMatrix ToeplitzOperator::materialize() const {
    CMatrix a(rows(), cols());
    for (std::size_t j = 0; j < cols(); ++j)
        for (std::size_t i = 0; i < rows(); ++i) a(i, j) = at(i, j);
    return a;
}

CMatrix ToeplitzOperator::columns(std::span<const std::size_t> idx) const {
    CMatrix a(rows(), idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= cols()) throw Error("dimension mismatch");
        for (std::size_t i = 0; i < rows(); ++i) a(i, k) = at(i, idx[k]);
    }
    return a;
}

std::uint64_t ToeplitzOperator::apply_cost() const { return 2 * fft_mult_count(nfft_) + nfft_; }

CVec ToeplitzOperator::apply(std::span<const cplx> x, OpCounter* ops) const {
    if (x.size() != cols()) throw Error("dimension mismatch");
    std::size_t nnz = 0;
    for (const auto& v : x) nnz += v != cplx(0.0, 0.0);
    if (nnz * rows() < apply_cost()) {
        // Column j is diag_[cols-1-j, cols-1-j+rows).
        CVec y(rows(), cplx(0.0, 0.0));
        const auto& k = kernels::active();
        for (std::size_t j = 0; j < cols(); ++j)
            if (x[j] != cplx(0.0, 0.0)) k.axpy(x[j], diag_.data() + (cols() - 1 - j), y.data(), rows());
        count_mul(ops, nnz * rows());
        return y;
    }
    CVec buf(nfft_, cplx(0.0, 0.0));
    std::copy(x.begin(), x.end(), buf.begin());
    fft_inplace(buf, FftDirection::Forward);
    kernels::active().mul(buf.data(), fwd_.data(), buf.data(), nfft_);
    fft_inplace(buf, FftDirection::Inverse);
    count_mul(ops, apply_cost());
    const std::size_t off = cols() - 1;
    return CVec(buf.begin() + static_cast<std::ptrdiff_t>(off),
                buf.begin() + static_cast<std::ptrdiff_t>(off + rows()));
}

CVec ToeplitzOperator::apply_adjoint(std::span<const cplx> y, OpCounter* ops) const {
    if (y.size() != rows()) throw Error("dimension mismatch");
    CVec buf(nfft_, cplx(0.0, 0.0));
    std::copy(y.begin(), y.end(), buf.begin());
    fft_inplace(buf, FftDirection::Forward);
    kernels::active().mul(buf.data(), adj_.data(), buf.data(), nfft_);
    fft_inplace(buf, FftDirection::Inverse);
    count_mul(ops, apply_cost());
    const std::size_t off = rows() - 1;
    return CVec(buf.begin() + static_cast<std::ptrdiff_t>(off),
                buf.begin() + static_cast<std::ptrdiff_t>(off + cols()));
}

}  // namespace tdsce
