#pragma once

#include <span>

#include "tdsce/numerics/types.hpp"

namespace tdsce {

using Support = std::vector<std::size_t>;

/// Indices of the k largest |x|, ascending. Ties go to the lower index; k clamps to x.size().
Support top_k_support(std::span<const cplx> x, std::size_t k);
Support top_k_support(std::span<const double> magnitude, std::size_t k);

/// Copy of x with everything outside top_k_support(x, k) zeroed.
CVec hard_threshold(std::span<const cplx> x, std::size_t k);

/// Indices with nonzero entries.
Support nonzero_support(std::span<const cplx> x);

Support support_union(const Support& a, const Support& b);

}  // namespace tdsce
