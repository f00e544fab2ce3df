#pragma once

#include <string>

#include "tdsce/numerics/select.hpp"

namespace tdsce {

enum class EstimateStatus { Ok, Diverged, Failed };

std::string to_string(EstimateStatus s);

struct ChannelEstimate {
    Support support;  // ascending
    CVec gains;       // one per support index
    CVec dense;       // length M, zero off support
    int iterations_used = 0;
    OpCounter ops;
    EstimateStatus status = EstimateStatus::Ok;
    bool under_observed = false;
    RVec residuals;  // residual norm per accepted iterate, starting with the initial one
};

/// Builds support/gains/dense from a coefficient vector over [0, x.size()).
ChannelEstimate estimate_from_coeffs(std::span<const cplx> x, std::size_t M);

}  // namespace tdsce
