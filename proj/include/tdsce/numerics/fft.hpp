#pragma once

#include <span>

#include "tdsce/numerics/types.hpp"

namespace tdsce {

enum class FftDirection { Forward, Inverse };

/// In-place DFT. Forward: X[k] = sum x[n] e^{-2 pi i k n / L}. Inverse includes 1/L.
/// Radix-2 for powers of two, Bluestein otherwise.
void fft_inplace(std::span<cplx> x, FftDirection dir, OpCounter* ops = nullptr);

CVec fft(std::span<const cplx> x, OpCounter* ops = nullptr);
CVec ifft(std::span<const cplx> x, OpCounter* ops = nullptr);

/// Complex multiplications used by one transform of length n.
std::uint64_t fft_mult_count(std::size_t n);

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

}  // namespace tdsce
