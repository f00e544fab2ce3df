#include "tdsce/estimator/received.hpp"

namespace tdsce {

ReceivedFrame::ReceivedFrame(CVec samples, FrameConfig frame) : samples_(std::move(samples)), frame_(frame) {
    frame_.validate();
}

std::span<const cplx> ReceivedFrame::window(std::size_t start, std::size_t len) const {
    if (start + len > samples_.size()) throw Error("stream too short");
    return {samples_.data() + start, len};
}

std::span<const cplx> ReceivedFrame::ts_main(std::size_t k) const {
    return window(symbol_start(k) + frame_.guard() - frame_.M, frame_.M);
}

std::span<const cplx> ReceivedFrame::ts_tail(std::size_t k, std::size_t len) const {
    if (len > frame_.M) throw Error("dimension mismatch");
    return window(symbol_start(k) + frame_.guard(), len);
}

std::span<const cplx> ReceivedFrame::data(std::size_t k) const {
    return window(symbol_start(k) + frame_.guard(), frame_.N);
}

CVec overlap_add_ts(const ReceivedFrame& rx, std::size_t k, std::size_t tail_len) {
    const auto main = rx.ts_main(k);
    const auto tail = rx.ts_tail(k, tail_len);
    CVec r(main.begin(), main.end());
    for (std::size_t n = 0; n < tail.size(); ++n) r[n] += tail[n];
    return r;
}

}  // namespace tdsce
