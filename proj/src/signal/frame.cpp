#include "tdsce/signal/frame.hpp"

#include <cmath>

#include "tdsce/numerics/fft.hpp"
#include "tdsce/numerics/kernels.hpp"

namespace tdsce {

void FrameConfig::validate() const {
    if (M < 1 || N < 1) throw Error("frame sizes must be positive");
    if (symbols_per_run < 1) throw Error("symbols_per_run must be positive");
}

SymbolStream assemble_stream(const FrameConfig& cfg, std::span<const std::uint8_t> payload_bits,
                             const PnSequence& pn) {
    cfg.validate();
    if (pn.size() != cfg.M) throw Error("dimension mismatch");
    if (payload_bits.size() != cfg.symbols_per_run * cfg.bits_per_symbol()) throw Error("payload size mismatch");
    SymbolStream s;
    s.frame = cfg;
    s.ts = pn.chips();
    s.symbols.resize(cfg.symbols_per_run);
    const double gain = std::sqrt(static_cast<double>(cfg.N));
    for (std::size_t k = 0; k < cfg.symbols_per_run; ++k) {
        auto& sym = s.symbols[k];
        sym.index = k;
        sym.data_freq = qpsk_map(payload_bits.subspan(k * cfg.bits_per_symbol(), cfg.bits_per_symbol()));
        sym.data_time = ifft(sym.data_freq);
        kernels::active().scale(gain, sym.data_time.data(), sym.data_time.size());
    }
    return s;
}

CVec SymbolStream::transmit() const {
    CVec out;
    out.reserve(symbols.size() * frame.symbol_length());
    for (const auto& sym : symbols) {
        out.insert(out.end(), ts.begin(), ts.end());
        if (frame.dual_pn) out.insert(out.end(), ts.begin(), ts.end());
        out.insert(out.end(), sym.data_time.begin(), sym.data_time.end());
    }
    return out;
}

}  // namespace tdsce
