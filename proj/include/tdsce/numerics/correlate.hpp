#pragma once

#include <span>

#include "tdsce/numerics/types.hpp"

namespace tdsce {

/// u[l] = sum_m conj(c[m]) r[(m + l) mod M], computed in the frequency domain.
CVec circular_correlate(std::span<const cplx> c, std::span<const cplx> r, OpCounter* ops = nullptr);

/// Same as above with a cached spectrum of c.
class CircularCorrelator {
public:
    explicit CircularCorrelator(std::span<const cplx> c);
    CVec operator()(std::span<const cplx> r, OpCounter* ops = nullptr) const;
    std::size_t size() const { return spectrum_.size(); }

private:
    CVec spectrum_;
};

}  // namespace tdsce
