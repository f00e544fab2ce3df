#pragma once

#include <span>

#include "tdsce/numerics/linalg.hpp"

namespace tdsce {

struct LsOptions {
    // Skip columns that are numerically dependent on earlier ones instead of failing.
    bool drop_dependent = false;
    // Relative threshold on the part of a column left after projection.
    double rank_tol = 1e-10;
};

struct LsSolution {
    CVec coeffs;             // zero for dropped columns
    std::vector<bool> kept;  // per column
    double residual_norm = 0.0;
};

/// argmin ||A x - y|| by Householder QR, columns taken in order.
LsSolution least_squares(const CMatrix& a, std::span<const cplx> y, OpCounter* ops = nullptr,
                         LsOptions opt = {});

}  // namespace tdsce
