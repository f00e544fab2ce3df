#include "tdsce/signal/pn.hpp"

#include <algorithm>
#include <map>

namespace tdsce {

CVec PnSequence::chips() const {
    CVec c(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) c[i] = cplx(values[i], 0.0);
    return c;
}

std::vector<std::uint8_t> lfsr_period(const PnGenerator& gen) {
    const int d = gen.degree;
    if (d < 2 || d > 24) throw Error("pn degree out of range");
    if (std::find(gen.taps.begin(), gen.taps.end(), d) == gen.taps.end()) throw Error("pn taps must include the degree");
    std::uint32_t mask = 0;
    for (int t : gen.taps) {
        if (t < 1 || t > d) throw Error("pn tap out of range");
        mask |= 1U << (d - t);
    }
    const std::uint32_t full = (1U << d) - 1U;
    std::uint32_t state = gen.seed & full;
    if (state == 0) throw Error("pn seed must be nonzero");

    const std::size_t period = full;
    std::vector<std::uint8_t> bits(period);
    for (std::size_t n = 0; n < period; ++n) {
        bits[n] = static_cast<std::uint8_t>(state & 1U);
        const std::uint32_t fb = static_cast<std::uint32_t>(__builtin_parity(state & mask));
        state = (state >> 1) | (fb << (d - 1));
    }
    return bits;
}

PnSequence generate_pn(std::size_t m, const PnGenerator& gen) {
    if (m < 2) throw Error("pn length must be at least 2");
    const auto bits = lfsr_period(gen);
    PnSequence pn;
    pn.generator = gen;
    pn.values.resize(m);
    for (std::size_t i = 0; i < m; ++i) pn.values[i] = bits[i % bits.size()] ? -1.0 : 1.0;
    return pn;
}

PnGenerator default_generator(std::size_t m) {
    // Primitive trinomials/pentanomials per degree.
    static const std::map<int, std::vector<int>> table{
        {2, {2, 1}},         {3, {3, 2}},          {4, {4, 3}},          {5, {5, 3}},
        {6, {6, 5}},         {7, {7, 6}},          {8, {8, 6, 5, 4}},    {9, {9, 5}},
        {10, {10, 7}},       {11, {11, 9}},        {12, {12, 11, 10, 4}}, {13, {13, 12, 11, 8}},
        {14, {14, 13, 12, 2}}, {15, {15, 14}},      {16, {16, 15, 13, 4}}};
    int d = 2;
    while (((std::size_t{1} << d) - 1) < m - 1) ++d;
    auto it = table.find(d);
    if (it == table.end()) throw Error("pn length out of range");
    return PnGenerator{d, it->second, 1};
}

}  // namespace tdsce
