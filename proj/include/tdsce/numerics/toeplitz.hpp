#pragma once

#include <span>

#include "tdsce/numerics/linalg.hpp"
#include "tdsce/numerics/types.hpp"

namespace tdsce {

/// Rows x cols Toeplitz matrix T[i][j] = t_{i-j}, applied by zero-padded FFT convolution.
class ToeplitzOperator {
public:
    /// first_col[i] = T[i][0], first_row[j] = T[0][j]; first_row[0] is ignored.
    ToeplitzOperator(CVec first_col, CVec first_row);

    /// Phi[i][j] = c[L-1+i-j] for i < M-L+1, j < L.
    static ToeplitzOperator from_pn(std::span<const cplx> c, std::size_t L);

    std::size_t rows() const { return col_.size(); }
    std::size_t cols() const { return row_.size(); }

    cplx at(std::size_t i, std::size_t j) const;
    CVec column(std::size_t j) const;
    CMatrix materialize() const;
    CMatrix columns(std::span<const std::size_t> idx) const;

    /// Sparse x is accumulated column by column when nnz * rows undercuts the FFT cost.
    CVec apply(std::span<const cplx> x, OpCounter* ops = nullptr) const;
    CVec apply_adjoint(std::span<const cplx> y, OpCounter* ops = nullptr) const;

    /// Multiplications charged to one FFT-based apply or apply_adjoint.
    std::uint64_t apply_cost() const;

private:
    CVec col_;
    CVec row_;
    std::size_t nfft_ = 0;
    CVec diag_;  // t_{m-(cols-1)}, m in [0, rows+cols-1)
    CVec fwd_;
    CVec adj_;
};

}  // namespace tdsce
