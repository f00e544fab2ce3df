#include "tdsce/signal/qpsk.hpp"

#include <cmath>
#include <numbers>

namespace tdsce {

CVec qpsk_map(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 != 0) throw Error("odd bit count");
    const double a = 1.0 / std::numbers::sqrt2;
    CVec out(bits.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = cplx(bits[2 * i] ? -a : a, bits[2 * i + 1] ? -a : a);
    }
    return out;
}

Bits qpsk_demap(std::span<const cplx> symbols) {
    Bits out(2 * symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        out[2 * i] = symbols[i].real() < 0.0 ? 1 : 0;
        out[2 * i + 1] = symbols[i].imag() < 0.0 ? 1 : 0;
    }
    return out;
}

}  // namespace tdsce
