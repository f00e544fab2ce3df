#pragma once

#include <cstdint>

#include "tdsce/numerics/types.hpp"

namespace tdsce {

/// Fibonacci LFSR description: s[n+d] = xor over t in taps of s[n+d-t]. taps must contain d.
struct PnGenerator {
    int degree = 8;
    std::vector<int> taps{8, 6, 5, 4};
    std::uint32_t seed = 1;  // initial register, low `degree` bits, nonzero
};

struct PnSequence {
    RVec values;  // +1 / -1
    PnGenerator generator;

    std::size_t size() const { return values.size(); }
    CVec chips() const;
};

/// One period (2^d - 1) of the m-sequence as bits.
std::vector<std::uint8_t> lfsr_period(const PnGenerator& gen);

/// Period cyclically extended or truncated to length m. Bit 0 maps to +1.
PnSequence generate_pn(std::size_t m, const PnGenerator& gen);

/// Smallest degree with 2^d - 1 >= m - 1, paired with a built-in primitive tap set.
PnGenerator default_generator(std::size_t m);

}  // namespace tdsce
