#pragma once

#include <span>

#include "tdsce/signal/frame.hpp"

namespace tdsce {

/// Received samples with the frame geometry needed to cut per-symbol windows.
class ReceivedFrame {
public:
    ReceivedFrame(CVec samples, FrameConfig frame);

    const FrameConfig& frame() const { return frame_; }
    const CVec& samples() const { return samples_; }
    std::size_t symbol_start(std::size_t k) const { return k * frame_.symbol_length(); }

    /// M samples of the (last) PN region of symbol k.
    std::span<const cplx> ts_main(std::size_t k) const;
    /// First len samples after the guard of symbol k (start of the data region).
    std::span<const cplx> ts_tail(std::size_t k, std::size_t len) const;
    /// N samples of the data region of symbol k.
    std::span<const cplx> data(std::size_t k) const;
    /// len samples starting at an absolute index.
    std::span<const cplx> window(std::size_t start, std::size_t len) const;

private:
    CVec samples_;
    FrameConfig frame_;
};

/// r_k = main + first tail_len samples of the tail window.
CVec overlap_add_ts(const ReceivedFrame& rx, std::size_t k, std::size_t tail_len);

}  // namespace tdsce
