#pragma once

#include "tdsce/signal/pn.hpp"
#include "tdsce/signal/qpsk.hpp"

namespace tdsce {

enum class Modulation { QPSK };

struct FrameConfig {
    std::size_t M = 255;
    std::size_t N = 2048;
    bool dual_pn = false;
    std::size_t symbols_per_run = 1;
    Modulation modulation = Modulation::QPSK;

    std::size_t guard() const { return dual_pn ? 2 * M : M; }
    std::size_t symbol_length() const { return guard() + N; }
    std::size_t bits_per_symbol() const { return 2 * N; }
    void validate() const;
};

struct TdsOfdmSymbol {
    std::size_t index = 0;
    CVec data_freq;  // QPSK symbols on N subcarriers
    CVec data_time;  // sqrt(N) * IDFT(data_freq), unit average power
};

struct SymbolStream {
    FrameConfig frame;
    CVec ts;  // PN chips, length M
    std::vector<TdsOfdmSymbol> symbols;

    /// Concatenated [c; x_0; c; x_1; ...] (with the PN doubled for dual_pn).
    CVec transmit() const;
};

SymbolStream assemble_stream(const FrameConfig& cfg, std::span<const std::uint8_t> payload_bits,
                             const PnSequence& pn);

}  // namespace tdsce
