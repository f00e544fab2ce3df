#pragma once

#include <cstdint>
#include <span>

#include "tdsce/numerics/types.hpp"

namespace tdsce {

using Bits = std::vector<std::uint8_t>;

/// Gray QPSK, bit pair (b0, b1) -> ((1 - 2 b0) + i (1 - 2 b1)) / sqrt(2).
CVec qpsk_map(std::span<const std::uint8_t> bits);

/// Minimum-distance hard decision.
Bits qpsk_demap(std::span<const cplx> symbols);

}  // namespace tdsce
